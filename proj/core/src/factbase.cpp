#include <sstream>
#include <stdexcept>

#include "rdlab/bounds.hpp"
#include "rdlab/checks.hpp"

namespace rdlab::bounds {

const std::vector<int>& characteristics() {
  static const std::vector<int> chars{0, 2, 3, 5, 7};
  return chars;
}

namespace {

bool parse_uint(const std::string& s, uint32_t& out) {
  if (s.empty()) return false;
  uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + uint64_t(c - '0');
    if (v > 0xffffffffull) return false;
  }
  out = uint32_t(v);
  return true;
}

// "Sp4(3)" -> dim 4, q 3
bool parse_classical(const std::string& s, const std::string& prefix,
                     uint32_t& n, uint32_t& q) {
  if (s.size() < prefix.size() + 4 || s.compare(0, prefix.size(), prefix))
    return false;
  size_t open = s.find('(', prefix.size());
  if (open == std::string::npos || s.back() != ')') return false;
  return parse_uint(s.substr(prefix.size(), open - prefix.size()), n) &&
         parse_uint(s.substr(open + 1, s.size() - open - 2), q);
}

}  // namespace

GroupId GroupId::parse(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty group name");
  GroupId g;
  g.name = name;
  uint32_t n = 0, q = 0;
  if (name == "W(E6)") {
    g.kind = GKind::weyl_e6;
    g.order = 51840;
    return g;
  }
  if (name.size() > 2 && name.compare(0, 2, "Z/") == 0 &&
      parse_uint(name.substr(2), n)) {
    g.kind = GKind::cyclic;
    g.n = n;
    g.order = n;
    g.abelian = true;
    g.trivial = n <= 1;
    return g;
  }
  if (name[0] == 'S' && parse_uint(name.substr(1), n)) {
    g.kind = GKind::symmetric;
    g.n = n;
    g.trivial = n <= 1;
    g.abelian = n <= 2;
    return g;
  }
  if (name[0] == 'A' && parse_uint(name.substr(1), n)) {
    g.kind = GKind::alternating;
    g.n = n;
    g.trivial = n <= 2;
    g.abelian = n <= 3;
    return g;
  }
  if (parse_classical(name, "Sp", n, q)) {
    g.kind = GKind::sp;
    g.n = n;
    g.q = q;
    return g;
  }
  if (parse_classical(name, "SU", n, q)) {
    g.kind = GKind::su;
    g.n = n;
    g.q = q;
    return g;
  }
  if (parse_classical(name, "PSp", n, q)) {
    g.kind = GKind::psp;
    g.n = n;
    g.q = q;
    return g;
  }
  if (parse_classical(name, "PSL", n, q) && n == 2) {
    g.kind = GKind::psl2;
    g.n = 2;
    g.q = q;
    return g;
  }
  if (parse_classical(name, "U", n, q)) {
    g.kind = GKind::u;
    g.n = n;
    g.q = q;
    return g;
  }
  // central-extension label "k.G"
  size_t dot = name.find('.');
  if (dot != std::string::npos && dot > 0 && dot + 1 < name.size() &&
      parse_uint(name.substr(0, dot), n)) {
    GroupId::parse(name.substr(dot + 1));  // validates the base name
    g.kind = GKind::extension;
    g.n = n;
    return g;
  }
  throw std::invalid_argument("unknown group name: " + name);
}

namespace {

std::vector<std::string> tokenize_respecting_quotes(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (quoted) {
      if (c == '"') {
        quoted = false;
        tokens.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ' ' || c == '\t') {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote: " + line);
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

std::string kv_value(const std::string& token, const std::string& key) {
  if (token.size() <= key.size() + 1 ||
      token.compare(0, key.size(), key) != 0 || token[key.size()] != '=')
    return {};
  return token.substr(key.size() + 1);
}

int parse_char_token(const std::string& tok) {
  if (tok == "*") return -1;
  uint32_t v = 0;
  if (!parse_uint(tok, v)) throw std::invalid_argument("bad characteristic");
  for (int c : characteristics())
    if (c == int(v)) return int(v);
  throw std::invalid_argument("characteristic outside {0,2,3,5,7}: " + tok);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void validate_certs(const std::vector<std::string>& certs,
                    const std::string& line) {
  if (certs.empty())
    throw std::invalid_argument("rule-instance requires certs=: " + line);
  for (const std::string& c : certs) {
    bool known = false;
    for (const auto& entry : checks::registry())
      if (entry.id == c) {
        known = true;
        break;
      }
    if (!known)
      throw std::invalid_argument("unknown certificate check id: " + c);
  }
}

}  // namespace

void Engine::touch_group(const std::string& name) {
  if (!groups_.count(name)) groups_.emplace(name, GroupId::parse(name));
}

Engine Engine::from_string(const std::string& text) {
  Engine e;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tok = tokenize_respecting_quotes(line);

    if (tok[0] == "axiom") {
      if (tok.size() < 3) throw std::invalid_argument("short axiom: " + line);
      const std::string& kind = tok[1];
      // every axiom form ends `cite "<text>"`; the quoted string is one token
      if (tok.size() < 2 || tok[tok.size() - 2] != "cite" ||
          tok.back() == "cite" || tok.back().empty())
        throw std::invalid_argument("uncited axiom rejected: " + line);
      const std::string cite = tok.back();

      if (kind == "bound" && tok.size() == 7) {
        BoundAxiom a;
        a.group = tok[2];
        a.characteristic = parse_char_token(tok[3]);
        if (!parse_uint(tok[4], a.bound))
          throw std::invalid_argument("bad bound: " + line);
        a.cite = cite;
        e.touch_group(a.group);
        e.bound_axioms_.push_back(std::move(a));
      } else if (kind == "subgroup" && tok.size() == 6) {
        SubgroupAxiom a{tok[2], tok[3], cite};
        e.touch_group(a.sub);
        e.touch_group(a.super);
        e.subgroup_axioms_.push_back(std::move(a));
      } else if (kind == "iso" && tok.size() == 6) {
        IsoAxiom a{tok[2], tok[3], cite};
        e.touch_group(a.g1);
        e.touch_group(a.g2);
        e.iso_axioms_.push_back(std::move(a));
      } else if (kind == "sequence" && tok.size() == 8) {
        SequenceAxiom a;
        a.a = tok[2];
        a.g = tok[3];
        a.b = tok[4];
        if (tok[5] == "central") a.central = true;
        else if (tok[5] == "normal") a.central = false;
        else throw std::invalid_argument("sequence needs central|normal");
        a.cite = cite;
        e.touch_group(a.a);
        e.touch_group(a.g);
        e.touch_group(a.b);
        e.sequence_axioms_.push_back(std::move(a));
      } else {
        throw std::invalid_argument("malformed axiom: " + line);
      }
    } else if (tok[0] == "rule-instance") {
      if (tok.size() < 3)
        throw std::invalid_argument("short rule-instance: " + line);
      RuleInstance ri;
      ri.rule = tok[1];
      std::string certs_raw;
      for (size_t i = 2; i < tok.size(); ++i) {
        std::string v;
        if (!(v = kv_value(tok[i], "group")).empty()) ri.group = v;
        else if (!(v = kv_value(tok[i], "p")).empty())
          ri.characteristic = parse_char_token(v);
        else if (!(v = kv_value(tok[i], "a")).empty()) parse_uint(v, ri.a);
        else if (!(v = kv_value(tok[i], "b")).empty()) parse_uint(v, ri.b);
        else if (!(v = kv_value(tok[i], "n")).empty()) parse_uint(v, ri.n);
        else if (!(v = kv_value(tok[i], "certs")).empty())
          certs_raw = v;
        else
          throw std::invalid_argument("bad rule-instance token: " + tok[i]);
      }
      ri.certs = split_commas(certs_raw);
      validate_certs(ri.certs, line);
      if (ri.rule == "lem2.5") {
        if (ri.group.empty())
          throw std::invalid_argument("lem2.5 needs group=: " + line);
        e.touch_group(ri.group);
        e.touch_group("S" + std::to_string(ri.a));
      } else if (ri.rule == "prop6.1c") {
        if (!ri.n) throw std::invalid_argument("prop6.1c needs n=: " + line);
        e.touch_group("S" + std::to_string(ri.n));
        e.touch_group("S6");
      } else {
        throw std::invalid_argument("unknown rule id: " + ri.rule);
      }
      e.instances_.push_back(std::move(ri));
    } else {
      throw std::invalid_argument("unparseable fact line: " + line);
    }
  }

  // classical groups pull their S_{q+1} comparison group into the universe
  std::vector<std::string> pending;
  for (const auto& [name, gid] : e.groups_)
    if (gid.kind == GKind::sp || gid.kind == GKind::u)
      pending.push_back("S" + std::to_string(gid.q + 1));
  for (const auto& name : pending) e.touch_group(name);
  // and A_n/S_n partners participate in cor2.2 when both sides exist;
  // alternating groups pull in their symmetric partner (free to add)
  pending.clear();
  for (const auto& [name, gid] : e.groups_)
    if (gid.kind == GKind::alternating && gid.n >= 3)
      pending.push_back("S" + std::to_string(gid.n));
  for (const auto& name : pending) e.touch_group(name);
  return e;
}

const std::string& Engine::default_fact_text() {
  static const std::string text = R"facts(# resolvent degree upper-bound fact base
# characteristic column: 0 2 3 5 7, * = all five

axiom bound S1 * 0 cite "trivial group"
axiom bound S2 0 1 cite "Sec. 1: rd_C(n) = 1 for every n <= 5"
axiom bound S3 0 1 cite "Sec. 1: rd_C(n) = 1 for every n <= 5"
axiom bound S4 0 1 cite "Sec. 1: rd_C(n) = 1 for every n <= 5; Reichstein 2022 Example 10.8; Farb-Wolfson Cor. 3.4"
axiom bound S5 0 1 cite "Sec. 1: rd_C(n) = 1 for every n <= 5"
axiom bound S6 0 2 cite "Hamilton, Eq. (e.upper-bounds): rd_C(6) <= 2; Dixmier p. 87"
axiom bound S7 0 3 cite "Hamilton, Eq. (e.upper-bounds): rd_C(7) <= 3"
axiom bound S8 0 4 cite "Hamilton, Eq. (e.upper-bounds): rd_C(8) <= 4; Farb-Wolfson Cor. 7.3"
axiom bound W(E6) 0 3 cite "Farb-Wolfson Sec. 8; Reichstein 2022 Prop. 15.1"

axiom subgroup 2.A7 U4(3) cite "Bray-Holt-Roney-Dougal Table 8.11: Z/4 o (2.A7) < SU4(3) induces 2.A7 < U4(3)"
axiom subgroup Z/4 SU4(3) cite "Bray-Holt-Roney-Dougal Table 8.11: central factor of Z/4 o (2.A7) < SU4(3)"
axiom subgroup 3.A7 SU3(5) cite "Bray-Holt-Roney-Dougal Table 8.6"
axiom subgroup SU3(5) U3(5) cite "determinant-one subgroup"
axiom subgroup 2.SU4(2) SU4(5) cite "Bray-Holt-Roney-Dougal Table 8.11"
axiom subgroup SU4(5) U4(5) cite "determinant-one subgroup"
axiom subgroup SU4(2) U4(2) cite "Sec. 3: determinant-one subgroup"
axiom subgroup S6 S7 cite "point stabilizer"
axiom subgroup S7 S8 cite "point stabilizer"

axiom sequence Z/2 2.A7 A7 central cite "double cover of A7"
axiom sequence Z/3 3.A7 A7 central cite "triple cover of A7"
axiom sequence Z/2 2.SU4(2) SU4(2) central cite "double cover of SU4(2)"
axiom sequence Z/2 Sp4(3) PSp4(3) central cite "center of Sp4(3) is {1, -1}"
axiom sequence SU4(2) W(E6) Z/2 normal cite "ATLAS p. 26: 1 -> SU4(2) -> W(E6) -> Z/2 -> 1"

axiom iso A6 PSL2(9) cite "ATLAS p. 4; unique simple group of order 360"
axiom iso SU4(2) PSp4(3) cite "ATLAS p. 26: exceptional isomorphism"

rule-instance lem2.5 group=PSL2(9) p=3 a=1 b=1 certs=cor2.2.psl2-9-facts
rule-instance prop6.1c n=7 p=7 certs=lem5.1d.cone-closure,lem5.1b.degree-dimension,prop6.1b.z123-freeness
rule-instance prop6.1c n=8 p=2 certs=lem5.1d.cone-closure,lem5.1b.degree-dimension,prop6.1b.z123-freeness
)facts";
  return text;
}

Engine Engine::with_default_facts() { return from_string(default_fact_text()); }

}  // namespace rdlab::bounds
