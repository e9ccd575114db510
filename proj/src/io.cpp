#include "maxsemi/io.hpp"

namespace maxsemi {

  nlohmann::json element_list_json(FiniteMonoid const& M, ElementSet const& X) {
    nlohmann::json out = nlohmann::json::array();
    for (auto i = X.find_first(); i != ElementSet::npos; i = X.find_next(i)) {
      out.push_back(M.element_string(static_cast<index_t>(i)));
    }
    return out;
  }

  nlohmann::json count_json(CountFormula const& c) {
    nlohmann::json out{{"applies", c.applies}, {"special_case", c.special_case}, {"formula", c.formula}};
    out["value"] = c.value ? nlohmann::json(*c.value) : nlohmann::json(nullptr);
    return out;
  }

  nlohmann::json descriptor_json(FiniteMonoid const& M, Descriptor const& d, nlohmann::json count_context) {
    nlohmann::json out;
    out["family"] = M.instance() ? std::string(family_name(M.instance()->family)) : M.name();
    out["degree"] = M.degree();
    out["j_rank"] = d.j_rank;
    out["kind"]   = std::string(kind_name(d.kind));
    out["origin"] = d.origin;
    out["payload"] = d.payload;
    out["count_context"] = std::move(count_context);
    return out;
  }

  nlohmann::json verdict_json(FiniteMonoid const& M, Verdict const& v) {
    using S = Verdict::Status;
    nlohmann::json out{{"proper", v.status != S::not_proper},
                       {"closed", v.status != S::not_proper && v.status != S::not_closed},
                       {"maximal", v.ok()}};
    nlohmann::json witness = nullptr;
    if (v.product_witness) {
      auto [a, b] = *v.product_witness;
      witness     = {{"a", M.element_string(a)}, {"b", M.element_string(b)},
                     {"product", M.element_string(M.product(a, b))}};
    } else if (v.excluded_witness) {
      witness = {{"excluded", M.element_string(*v.excluded_witness)}};
    } else if (v.status == S::not_proper) {
      witness = {{"reason", "equals the whole monoid"}};
    }
    out["witness_on_failure"] = witness;
    return out;
  }

  nlohmann::json greens_json(FiniteMonoid const& M, GreensStructure const& G) {
    nlohmann::json classes = nlohmann::json::array();
    for (auto const& J : G.j_classes) {
      classes.push_back({{"rank", J.rank},
                         {"size", J.elements.size()},
                         {"l_classes", J.l_classes.size()},
                         {"r_classes", J.r_classes.size()},
                         {"h_size", J.h_size},
                         {"idempotents", J.idempotents},
                         {"regular", J.regular}});
    }
    return {{"monoid", M.name()}, {"size", M.size()}, {"j_classes", classes}};
  }

  void write_cayley_csv(std::ostream& out, FiniteMonoid const& M) {
    auto quoted = [&](index_t i) { return '"' + M.element_string(i) + '"'; };
    out << "\"*\"";
    for (index_t b = 0; b < M.size(); ++b) {
      out << ',' << quoted(b);
    }
    out << '\n';
    for (index_t a = 0; a < M.size(); ++a) {
      out << quoted(a);
      for (index_t b = 0; b < M.size(); ++b) {
        out << ',' << M.product(a, b);
      }
      out << '\n';
    }
  }

  nlohmann::json oracle_report_json(FiniteMonoid const& M, OracleReport const& r) {
    auto sets = [&](std::vector<ElementSet> const& v) {
      nlohmann::json a = nlohmann::json::array();
      for (auto const& s : v) {
        a.push_back(element_list_json(M, ~s));
      }
      return a;
    };
    return {{"host", r.host},
            {"oracle", r.oracle},
            {"agreement", r.agreement},
            {"oracle_count", r.oracle_sets.size()},
            {"engine_count", r.engine_sets.size()},
            {"only_oracle_complements", sets(r.only_oracle)},
            {"only_engine_complements", sets(r.only_engine)}};
  }

}  // namespace maxsemi
