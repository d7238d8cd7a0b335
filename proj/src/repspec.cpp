#include "triplet/repspec.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "triplet/reps.hpp"

namespace triplet {

GroupWord parse_word(const std::string& text) {
  std::vector<GroupWord::Letter> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto lower = [&](std::size_t k) {
    return std::islower(static_cast<unsigned char>(text[k]));
  };
  auto digit = [&](std::size_t k) {
    return std::isdigit(static_cast<unsigned char>(text[k]));
  };
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!lower(i)) throw ParseError("expected generator label", i);
    std::string label;
    while (i < n && lower(i)) label += text[i++];
    if (i >= n || !digit(i)) throw ParseError("expected generator index", i);
    while (i < n && digit(i)) label += text[i++];
    int exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      if (text.compare(i, 2, "-1") != 0) throw ParseError("expected -1 after ^", i);
      exp = -1;
      i += 2;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character in word", i);
    letters.emplace_back(label, exp);
  }
  return GroupWord(std::move(letters));
}

namespace {

struct SpecParams {
  std::string name;
  // key -> (raw value, position of the value in the spec string)
  std::map<std::string, std::pair<std::string, std::size_t>> params;
};

SpecParams parse_spec(const std::string& s) {
  SpecParams out;
  std::size_t i = 0;
  while (i < s.size() && s[i] != ':') ++i;
  out.name = s.substr(0, i);
  if (out.name.empty()) throw ParseError("missing representation name", 0);
  if (i < s.size()) ++i;
  while (i < s.size()) {
    std::size_t key_start = i;
    while (i < s.size() && s[i] != '=' && s[i] != ',') ++i;
    if (i >= s.size() || s[i] != '=') throw ParseError("expected '=' in parameter", i);
    std::string key = s.substr(key_start, i - key_start);
    if (key.empty()) throw ParseError("empty parameter name", key_start);
    ++i;
    std::size_t val_start = i;
    while (i < s.size() && s[i] != ',') ++i;
    std::string value = s.substr(val_start, i - val_start);
    if (value.empty()) throw ParseError("empty parameter value", val_start);
    out.params.emplace(key, std::make_pair(value, val_start));
    if (i < s.size()) ++i;
  }
  return out;
}

const std::pair<std::string, std::size_t>& fetch(const SpecParams& sp,
                                                 const std::string& key) {
  auto it = sp.params.find(key);
  if (it == sp.params.end())
    throw ParseError("missing parameter '" + key + "' for '" + sp.name + "'", 0);
  return it->second;
}

int parse_int(const std::pair<std::string, std::size_t>& v) {
  try {
    std::size_t used = 0;
    int r = std::stoi(v.first, &used);
    if (used != v.first.size()) throw std::invalid_argument("trailing characters");
    return r;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + v.first + "'", v.second);
  }
}

Rational parse_rational(const std::pair<std::string, std::size_t>& v) {
  try {
    return Rational::from_string(v.first);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected a rational number, got '" + v.first + "'", v.second);
  }
}

}  // namespace

std::string eval_repspec_word(const std::string& spec, const std::string& word) {
  const SpecParams sp = parse_spec(spec);
  const GroupWord w = parse_word(word);
  if (sp.name == "tits") {
    return word_eval(tits_theta(parse_int(fetch(sp, "n"))), w).to_string();
  }
  if (sp.name == "mu" || sp.name == "mu2") {
    const int n = parse_int(fetch(sp, "n"));
    const auto& kv = fetch(sp, "k");
    const MuExp e = kv.first == "s" ? MuExp::symbolic() : MuExp::concrete(parse_int(kv));
    const RepCandidate<LaurentPoly> rep =
        sp.name == "mu" ? mu_matrix(n, e) : mu_doubleprime(n, e);
    return word_eval(rep, w).to_string();
  }
  if (sp.name == "lambda") {
    const int n = parse_int(fetch(sp, "n"));
    return word_eval(lambda_homog(n, parse_rational(fetch(sp, "b"))), w).to_string();
  }
  if (sp.name == "omega1" || sp.name == "omega2") {
    const int n = parse_int(fetch(sp, "n"));
    const Rational x = parse_rational(fetch(sp, "x"));
    const Rational b = sp.name == "omega1" ? parse_rational(fetch(sp, "b")) : x;
    const int variant = sp.name == "omega1" ? 1 : 2;
    return word_eval(omega(n, variant, b, x), w).to_string();
  }
  if (sp.name == "l3") {
    const int j = parse_int(fetch(sp, "j"));
    std::map<std::string, Rational> params;
    for (const auto& [key, value] : sp.params)
      if (key != "j") params.emplace(key, parse_rational(value));
    return word_eval(l3_family<Rational>(j, params), w).to_string();
  }
  throw ParseError("unknown representation '" + sp.name + "'", 0);
}

}  // namespace triplet
