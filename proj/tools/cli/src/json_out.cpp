#include "json_out.hpp"

#include "eulerdec/poly_text.hpp"

namespace eulerdec::cli {

json to_json(const Rat& r) { return r.str(); }

json to_json(const mpz_class& z) { return z.get_str(); }

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", std::move(coeffs)}, {"text", format_human(p)}};
}

json to_json(const Linear& l) { return {{"slope", l.slope().str()}, {"intercept", l.intercept().str()}}; }

json to_json(const NormalizedDecomposition& d) {
  return {{"scale", to_json(d.scale)},
          {"outer", to_json(d.outer)},
          {"inner", to_json(d.inner)},
          {"inner_degree", d.inner_degree()}};
}

json to_json(const ExceptionalForm& f) {
  struct Visitor {
    json operator()(const CaseI& w) const { return {{"p", to_json(w.p)}}; }
    json operator()(const CaseII& w) const { return {{"p", to_json(w.p)}}; }
    json operator()(const CaseIII& w) const { return {{"delta", to_json(w.delta)}, {"p", to_json(w.p)}}; }
    json operator()(const CaseIV& w) const {
      return {{"gamma", to_json(w.gamma)}, {"delta", to_json(w.delta)}, {"t", w.t}};
    }
    json operator()(const CaseV& w) const {
      return {{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"delta", to_json(w.delta)}, {"p", to_json(w.p)}};
    }
  };
  return {{"case", std::string(to_string(f.tag()))},
          {"k", f.k},
          {"f", to_json(f.f)},
          {"witness", std::visit(Visitor{}, f.witness)},
          {"argument", to_json(f.argument())}};
}

json to_json(const FamilyPair& p) {
  return {{"index", p.index}, {"x", to_json(p.x)}, {"y", to_json(p.y)}, {"terms", to_json(p.terms)}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace eulerdec::cli
