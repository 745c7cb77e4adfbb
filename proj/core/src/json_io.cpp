#include "qsg/json_io.hpp"

namespace qsg {

namespace {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error("expected integer, got " + j.dump());
}

}  // namespace

Json rat_to_json(const Rat& r) {
  Json j;
  j["num"] = int_to_json(r.get_num());
  j["den"] = int_to_json(r.get_den());
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error("expected rational {num,den}, got " + j.dump());
  Rat r(int_from_json(j.at("num")), int_from_json(j.at("den")));
  if (r.get_den() == 0) throw Error("rational with zero denominator");
  r.canonicalize();
  return r;
}

Json elem_to_json(const Semigroup& s, const GroupElem& g) {
  s.check_elem(g);
  switch (s.kind()) {
    case Kind::lattice: {
      Json arr = Json::array();
      for (const Int& x : g.coords()) arr.push_back(int_to_json(x));
      return arr;
    }
    case Kind::numerical:
      return int_to_json(g.value());
    case Kind::half_line:
      return rat_to_json(g.rat());
  }
  throw Error("bad kind");
}

GroupElem elem_from_json(const Semigroup& s, const Json& j) {
  switch (s.kind()) {
    case Kind::lattice: {
      if (!j.is_array()) throw Error("lattice element must be an array");
      std::vector<Int> c;
      for (const Json& x : j) c.push_back(int_from_json(x));
      GroupElem g(std::move(c));
      s.check_elem(g);
      return g;
    }
    case Kind::numerical:
      return GroupElem(int_from_json(j));
    case Kind::half_line:
      return GroupElem(rat_from_json(j));
  }
  throw Error("bad kind");
}

Json instance_to_json(const Semigroup& s) {
  Json j;
  j["kind"] = kind_name(s.kind());
  if (s.kind() == Kind::lattice) j["rank"] = s.rank();
  if (s.kind() == Kind::numerical) {
    Json gens = Json::array();
    for (const Int& g : s.generators()) gens.push_back(int_to_json(g));
    j["generators"] = gens;
  }
  return j;
}

Semigroup instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error("instance config must be an object with 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lattice") {
    if (!j.contains("rank")) throw Error("lattice config needs 'rank'");
    return Semigroup::lattice(j.at("rank").get<int>());
  }
  if (kind == "numerical") {
    if (!j.contains("generators"))
      throw Error("numerical config needs 'generators'");
    std::vector<Int> gens;
    for (const Json& g : j.at("generators")) gens.push_back(int_from_json(g));
    return Semigroup::numerical(std::move(gens));
  }
  if (kind == "half_line") return Semigroup::half_line();
  throw Error("unknown instance kind '" + kind + "'");
}

Json ideal_to_json(const Semigroup& s, const GIdeal& x) {
  Json j;
  if (x.is_empty()) {
    j["kind"] = "empty";
    return j;
  }
  switch (s.kind()) {
    case Kind::lattice: {
      j["kind"] = "lattice";
      Json arr = Json::array();
      for (const Int& b : x.base()) arr.push_back(int_to_json(b));
      j["base"] = arr;
      break;
    }
    case Kind::half_line:
      j["kind"] = "half_line";
      j["t"] = rat_to_json(x.t());
      break;
    case Kind::numerical: {
      j["kind"] = "numerical";
      j["offset"] = int_to_json(x.offset());
      std::string mask;
      for (bool b : x.mask()) mask.push_back(b ? '1' : '0');
      j["mask"] = mask;
      break;
    }
  }
  return j;
}

GIdeal ideal_from_json(const Semigroup& s, const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error("ideal must be an object with 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return empty_ideal(s);
  if (kind != kind_name(s.kind()))
    throw Error("ideal kind '" + kind + "' does not match instance");
  switch (s.kind()) {
    case Kind::lattice: {
      std::vector<Int> base;
      for (const Json& b : j.at("base")) base.push_back(int_from_json(b));
      if (base.size() != static_cast<size_t>(s.rank()))
        throw Error("ideal base arity mismatch");
      return GIdeal::lattice_based(std::move(base));
    }
    case Kind::half_line:
      return GIdeal::half_line_from(rat_from_json(j.at("t")));
    case Kind::numerical: {
      const std::string mask_str = j.at("mask").get<std::string>();
      std::vector<bool> mask;
      for (char c : mask_str) {
        if (c != '0' && c != '1') throw Error("ideal mask must be 0/1 string");
        mask.push_back(c == '1');
      }
      return GIdeal::numerical_set(s, int_from_json(j.at("offset")),
                                   std::move(mask));
    }
  }
  throw Error("bad kind");
}

Json word_to_json(const Semigroup& s, const Word& w) {
  Json arr = Json::array();
  for (const Letter& l : w.letters) {
    Json lj;
    lj["base"] = elem_to_json(s, l.base);
    lj["exp"] = l.exp;
    arr.push_back(lj);
  }
  return arr;
}

Word word_from_json(const Semigroup& s, const Json& j) {
  if (!j.is_array()) throw Error("word must be an array of letters");
  std::vector<Letter> letters;
  for (const Json& lj : j) {
    Letter l;
    l.base = elem_from_json(s, lj.at("base"));
    l.exp = lj.at("exp").get<int>();
    letters.push_back(std::move(l));
  }
  return make_word(s, std::move(letters));
}

Json coeff_to_json(const QQi& c) {
  Json j;
  j["re"] = rat_to_json(c.re);
  j["im"] = rat_to_json(c.im);
  return j;
}

QQi coeff_from_json(const Json& j) {
  if (!j.is_object()) throw Error("coefficient must be {re, im}");
  QQi c;
  c.re = rat_from_json(j.at("re"));
  c.im = rat_from_json(j.at("im"));
  return c;
}

Json element_to_json(const Semigroup& s, const Element& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json t;
    t["coeff"] = coeff_to_json(c);
    t["ideal"] = ideal_to_json(s, m.ideal());
    t["g"] = elem_to_json(s, m.g());
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

Element element_from_json(const Semigroup& s, const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw Error("element must be an object with 'terms'");
  Element x;
  for (const Json& t : j.at("terms")) {
    QQi c = coeff_from_json(t.at("coeff"));
    GIdeal ideal = ideal_from_json(s, t.at("ideal"));
    GroupElem g = elem_from_json(s, t.at("g"));
    if (ideal.is_empty() || c.is_zero()) continue;
    x.add_term(Monomial::make(s, std::move(ideal), std::move(g)), c);
  }
  return x;
}

Json tensor_to_json(const Semigroup& s, const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms()) {
    Json tj;
    tj["coeff"] = coeff_to_json(c);
    Json left, right;
    left["ideal"] = ideal_to_json(s, k.first.ideal());
    left["g"] = elem_to_json(s, k.first.g());
    right["ideal"] = ideal_to_json(s, k.second.ideal());
    right["g"] = elem_to_json(s, k.second.g());
    tj["left"] = left;
    tj["right"] = right;
    terms.push_back(tj);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

TensorElement tensor_from_json(const Semigroup& s, const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw Error("tensor element must be an object with 'terms'");
  TensorElement t;
  for (const Json& tj : j.at("terms")) {
    QQi c = coeff_from_json(tj.at("coeff"));
    const Json& lj = tj.at("left");
    const Json& rj = tj.at("right");
    Monomial left = Monomial::make(s, ideal_from_json(s, lj.at("ideal")),
                                   elem_from_json(s, lj.at("g")));
    Monomial right = Monomial::make(s, ideal_from_json(s, rj.at("ideal")),
                                    elem_from_json(s, rj.at("g")));
    t.add_term({left, right}, c);
  }
  return t;
}

Json group_algebra_to_json(const Semigroup& s, const GroupAlgebraElement& u) {
  Json terms = Json::array();
  for (const auto& [g, c] : u.terms()) {
    Json t;
    t["coeff"] = coeff_to_json(c);
    t["g"] = elem_to_json(s, g);
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

GroupAlgebraElement group_algebra_from_json(const Semigroup& s, const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw Error("group algebra element must be an object with 'terms'");
  GroupAlgebraElement u;
  for (const Json& t : j.at("terms"))
    u.add_term(elem_from_json(s, t.at("g")), coeff_from_json(t.at("coeff")));
  return u;
}

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::window_too_small: return "window_too_small";
  }
  return "?";
}

Json report_to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  Json cases = Json::array();
  for (const CaseResult& c : r.cases) {
    Json cj;
    cj["id"] = c.id;
    cj["status"] = status_name(c.status);
    cj["witness"] = c.witness;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  Json summary;
  summary["total"] = r.cases.size();
  summary["pass"] = r.count(CaseStatus::pass);
  summary["fail"] = r.count(CaseStatus::fail);
  summary["window_too_small"] = r.count(CaseStatus::window_too_small);
  for (const auto& [k, v] : r.params) summary[k] = v;
  j["summary"] = summary;
  return j;
}

}  // namespace qsg
