// maxsemi: command-line front end.  Exit codes: 0 all verified, 1 usage or
// internal error, 2 capacity skips present, 3 verification mismatch.
#include <algorithm>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxsemi/classify.hpp"
#include "maxsemi/count_formula.hpp"
#include "maxsemi/io.hpp"
#include "maxsemi/registry.hpp"
#include "maxsemi/verify.hpp"

using namespace maxsemi;
using nlohmann::json;

namespace {

  enum Exit { ok = 0, usage = 1, capacity = 2, mismatch = 3 };

  struct Output {
    json        doc;
    std::string text;
    std::string csv;
    int         code = ok;
  };

  Family family_arg(std::string const& s) {
    auto f = parse_family(s);
    if (!f) {
      throw CLI::ValidationError("--family", "unknown family '" + s + "'");
    }
    return *f;
  }

  std::vector<ElementSet> sorted_sets(std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<ElementSet> materialize(FiniteMonoid const& M, GreensStructure const& G,
                                      std::vector<Descriptor> const& ds) {
    std::vector<ElementSet> out;
    for (auto const& d : ds) {
      out.push_back(d.materialize(M, G));
    }
    return out;
  }

  bool is_semilattice(FiniteMonoid const& M) {
    if (M.size() > 4096) {
      return false;
    }
    for (index_t a = 0; a < M.size(); ++a) {
      if (M.product(a, a) != a) {
        return false;
      }
      for (index_t b = 0; b < a; ++b) {
        if (M.product(a, b) != M.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Output cmd_info(Family f, int n, Budgets const& budgets) {
    auto M = FiniteMonoid::enumerate(f, n, budgets);
    auto G = greens(M);
    auto units = G.units_members();
    std::string shape = "other";
    if (units.size() <= budgets.subgroup) {
      switch (recognise(GroupTable::from_monoid(M, units)).kind) {
        case GroupShape::Kind::trivial: shape = "trivial"; break;
        case GroupShape::Kind::cyclic: shape = "cyclic"; break;
        case GroupShape::Kind::dihedral: shape = "dihedral"; break;
        default: break;
      }
    } else {
      shape = "unexamined";
    }
    std::size_t idempotents = 0;
    for (auto const& J : G.j_classes) {
      idempotents += J.idempotents;
    }
    bool const semi = is_semilattice(M);
    Output     out;
    auto       greens_doc = greens_json(M, G);
    out.doc = {{"command", "info"},
               {"family", std::string(family_name(f))},
               {"degree", n},
               {"name", M.name()},
               {"order", M.size()},
               {"units", {{"order", units.size()}, {"shape", shape}}},
               {"idempotents", idempotents},
               {"semilattice", semi},
               {"j_classes", greens_doc["j_classes"]}};
    std::ostringstream t;
    t << M.name() << ": order " << M.size() << ", units of order " << units.size() << " (" << shape
      << "), " << idempotents << " idempotents" << (semi ? ", semilattice" : "") << '\n';
    for (auto const& J : greens_doc["j_classes"]) {
      t << "  rank " << J["rank"] << ": " << J["size"] << " elements, " << J["l_classes"] << " L, "
        << J["r_classes"] << " R, H of size " << J["h_size"] << ", "
        << (J["regular"].get<bool>() ? "regular" : "non-regular") << '\n';
    }
    out.text = t.str();
    return out;
  }

  json set_entry(FiniteMonoid const& M, Verifier& V, ElementSet const& X) {
    ElementSet removed = ~X;
    json       e{{"kept_count", X.count()}, {"removed_count", removed.count()}};
    e["removed"] = element_list_json(M, removed);
    e["verdict"] = verdict_json(M, V.verify_maximal(X));
    return e;
  }

  Output cmd_maximal(Family f, int n, std::string const& mode, bool cross_check, Budgets const& budgets) {
    auto       M = FiniteMonoid::enumerate(f, n, budgets);
    auto       G = greens(M);
    Verifier   V(M, G, budgets);
    auto const count = count_formula(f, n, budgets);
    Output     out;
    json       notes   = json::array();
    json       entries = json::array();
    std::vector<ElementSet> primary;
    std::string             statement;
    bool                    all_ok = true;
    bool                    skipped = false;

    auto add_descriptors = [&](std::vector<Descriptor> const& ds) {
      for (auto const& d : ds) {
        ElementSet X = d.materialize(M, G);
        json       e = descriptor_json(M, d, count_json(count));
        auto       s = set_entry(M, V, X);
        e.update(s);
        all_ok = all_ok && e["verdict"]["maximal"].get<bool>();
        entries.push_back(e);
        primary.push_back(X);
      }
    };

    std::optional<RegistryResult> reg;
    auto registry = [&]() -> RegistryResult const& {
      if (!reg) {
        reg = theorem_registry(M, G, budgets);
      }
      return *reg;
    };
    std::optional<Classification> cls;
    auto classification = [&]() -> Classification const& {
      if (!cls) {
        cls = classify(M, G, budgets);
      }
      return *cls;
    };

    if (mode == "theorem") {
      auto const& r = registry();
      statement     = r.statement;
      if (!r.applies) {
        notes.push_back("no statement covers this instance");
        skipped = true;
      }
      add_descriptors(r.descriptors);
    } else if (mode == "classify") {
      auto const& c = classification();
      if (!c.complete) {
        skipped = true;
      }
      if (!c.note.empty()) {
        notes.push_back(c.note);
      }
      add_descriptors(c.descriptors);
    } else {
      std::vector<ElementSet> sets;
      if (M.size() <= budgets.oracle) {
        sets = exhaustive_maximal(M, budgets);
        statement = "exhaustive subset search";
      } else {
        sets = jclass_restricted_maximal(M, G, budgets);
        statement = "J-class restricted search";
      }
      for (auto const& X : sorted_sets(sets)) {
        auto e = set_entry(M, V, X);
        all_ok = all_ok && e["verdict"]["maximal"].get<bool>();
        entries.push_back(e);
        primary.push_back(X);
      }
    }

    json check = nullptr;
    if (cross_check && !(mode == "theorem" && !registry().applies)) {
      std::optional<std::pair<std::string, std::vector<ElementSet>>> other;
      if (mode != "theorem" && registry().applies) {
        other.emplace("theorem", materialize(M, G, registry().descriptors));
      } else if (mode != "classify") {
        other.emplace("classify", materialize(M, G, classification().descriptors));
      }
      if (other) {
        // An incomplete classification only speaks for the J-classes it examined.
        std::vector<ElementSet> mine = primary;
        bool const partial = (mode == "classify" || other->first == "classify") && !classification().complete;
        if (partial) {
          std::set<std::uint32_t> examined;
          auto j_of_set = [&](ElementSet const& X) { return G.j_of[(~X).find_first()]; };
          for (auto const& X : materialize(M, G, classification().descriptors)) {
            examined.insert(j_of_set(X));
          }
          auto keep = [&](std::vector<ElementSet>& v) {
            std::erase_if(v, [&](ElementSet const& X) { return !examined.count(j_of_set(X)); });
          };
          keep(mine);
          keep(other->second);
          skipped = skipped || mode == "classify";
        }
        auto rep = compare_sets(M.name(), other->first, other->second, mine);
        check    = {{"against", other->first}, {"agreement", rep.agreement}, {"restricted", partial}};
        if (!rep.agreement) {
          check["report"] = oracle_report_json(M, rep);
        }
        all_ok = all_ok && rep.agreement;
      } else {
        notes.push_back("no second mode available for cross-checking");
      }
    }

    out.code = !all_ok ? mismatch : skipped ? capacity : ok;
    out.doc  = {{"command", "maximal"},
                {"family", std::string(family_name(f))},
                {"degree", n},
                {"name", M.name()},
                {"mode", mode},
                {"statement", statement},
                {"count", entries.size()},
                {"count_formula", count_json(count)},
                {"entries", entries},
                {"cross_check", check},
                {"notes", notes},
                {"status", out.code == ok ? "verified" : out.code == capacity ? "incomplete" : "mismatch"}};
    std::ostringstream t;
    t << M.name() << " [" << mode << "]: " << entries.size() << " maximal subsemigroups";
    if (count.applies) {
      t << " (formula " << count.formula << " = "
        << (count.value ? std::to_string(*count.value) : std::string("?")) << ")";
    }
    t << '\n';
    for (auto const& e : entries) {
      t << "  ";
      if (e.contains("kind")) {
        t << e["kind"].get<std::string>() << " rank " << e["j_rank"] << " " << e["origin"].get<std::string>()
          << " " << e["payload"].dump() << ": ";
      }
      t << "removes " << e["removed_count"] << ", "
        << (e["verdict"]["maximal"].get<bool>() ? "maximal" : "NOT maximal") << '\n';
    }
    if (!check.is_null()) {
      t << "  cross-check against " << check["against"].get<std::string>() << ": "
        << (check["agreement"].get<bool>() ? "agree" : "DISAGREE") << '\n';
    }
    for (auto const& note : notes) {
      t << "  note: " << note.get<std::string>() << '\n';
    }
    out.text = t.str();
    return out;
  }

  std::pair<int, int> degree_range(std::string const& s) {
    auto dots = s.find("..");
    try {
      if (dots == std::string::npos) {
        int d = std::stoi(s);
        return {d, d};
      }
      return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (std::exception const&) {
      throw CLI::ValidationError("--degrees", "expected a..b, got '" + s + "'");
    }
  }

  std::string csv_field(json const& v) {
    if (v.is_null()) {
      return "";
    }
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string q = "\"";
      for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return q + '"';
    }
    return v.dump();
  }

  Output cmd_table1(std::pair<int, int> range, std::vector<Family> families, Budgets const& budgets) {
    static char const* columns[] = {"family", "n", "formula", "formula_count", "constructed_count",
                                    "verified", "status", "note"};
    Output out;
    json   rows = json::array();
    bool   any_capacity = false, any_mismatch = false;
    for (Family f : families) {
      for (int n = range.first; n <= range.second; ++n) {
        auto count = count_formula(f, n, budgets);
        json row{{"family", std::string(family_name(f))},
                 {"n", n},
                 {"formula", count.formula},
                 {"formula_count", count.value ? json(*count.value) : json(nullptr)},
                 {"constructed_count", nullptr},
                 {"verified", false},
                 {"status", ""},
                 {"note", ""}};
        try {
          auto M = FiniteMonoid::enumerate(f, n, budgets);
          auto G = greens(M);
          auto r = theorem_registry(M, G, budgets);
          if (!r.applies && !count.applies) {
            row["status"] = "not-applicable";
            row["verified"] = true;
            row["note"]   = "trivial monoid";
          } else {
            Verifier V(M, G, budgets);
            auto     sets  = materialize(M, G, r.descriptors);
            bool     maxed = std::all_of(sets.begin(), sets.end(), [&](auto const& X) { return V.verify_maximal(X).ok(); });
            auto     s     = sorted_sets(sets);
            bool     distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
            row["constructed_count"] = sets.size();
            bool const equal = count.value && *count.value == sets.size();
            row["verified"]  = maxed && distinct && equal;
            if (!count.value) {
              row["status"] = "symbolic";
              row["note"]   = "symmetric group count out of budget";
              any_capacity  = true;
            } else if (maxed && distinct && equal) {
              row["status"] = count.special_case ? "verified-exception" : "verified";
            } else {
              row["status"] = "mismatch";
              row["note"]   = !maxed ? "a constructed set is not maximal"
                              : !distinct ? "constructed sets repeat"
                                          : "constructed count differs from the stated count";
              any_mismatch  = true;
            }
          }
        } catch (CapacityError const& e) {
          row["status"] = "capacity";
          row["note"]   = e.what();
          any_capacity  = true;
        }
        rows.push_back(row);
      }
    }
    out.code = any_mismatch ? mismatch : any_capacity ? capacity : ok;
    out.doc  = {{"command", "table1"}, {"degrees", {range.first, range.second}}, {"rows", rows}};
    std::ostringstream csv, text;
    for (std::size_t i = 0; i < std::size(columns); ++i) {
      csv << (i ? "," : "") << columns[i];
    }
    csv << '\n';
    for (auto const& row : rows) {
      for (std::size_t i = 0; i < std::size(columns); ++i) {
        csv << (i ? "," : "") << csv_field(row[columns[i]]);
      }
      csv << '\n';
      text << row["family"].get<std::string>() << '_' << row["n"] << ": formula "
           << csv_field(row["formula_count"]) << ", constructed " << csv_field(row["constructed_count"]) << ", "
           << row["status"].get<std::string>();
      if (!row["note"].get<std::string>().empty()) {
        text << " (" << row["note"].get<std::string>() << ")";
      }
      text << '\n';
    }
    out.csv  = csv.str();
    out.text = text.str();
    return out;
  }

  Output cmd_cayley(Family f, int n, Budgets const& budgets) {
    auto               M = FiniteMonoid::enumerate(f, n, budgets);
    Output             out;
    std::ostringstream csv;
    write_cayley_csv(csv, M);
    json elements = element_list_json(M, M.full_set());
    json table    = json::array();
    for (index_t a = 0; a < M.size(); ++a) {
      json row = json::array();
      for (index_t b = 0; b < M.size(); ++b) {
        row.push_back(M.product(a, b));
      }
      table.push_back(row);
    }
    out.doc  = {{"command", "cayley"}, {"family", std::string(family_name(f))}, {"degree", n},
                {"elements", elements}, {"table", table}};
    out.csv  = csv.str();
    out.text = out.csv;
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal subsemigroups of monoids of partial transformations and diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", output, budget_spec;
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", output, "Write to this file instead of stdout");
  app.add_option("--budgets", budget_spec, "key=value,... on top of MAXSEMI_BUDGETS");

  std::string family;
  int         degree = 1;
  auto        add_instance = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Family tag, e.g. POI, PB, I*")->required();
    sub->add_option("--degree", degree, "Degree n")->required()->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "Order, units and J-classes");
  add_instance(info);

  auto*       maximal = app.add_subcommand("maximal", "List and verify maximal subsemigroups");
  std::string mode    = "theorem";
  bool        no_cross = false;
  add_instance(maximal);
  maximal->add_option("--mode", mode, "theorem, classify or oracle")
      ->check(CLI::IsMember({"theorem", "classify", "oracle"}));
  maximal->add_flag("--no-cross-check", no_cross, "Skip comparison with a second mode");

  auto*       table1  = app.add_subcommand("table1", "Closed-form counts against constructions");
  std::string degrees = "1..4", family_list;
  table1->add_option("--degrees", degrees, "Degree range a..b");
  table1->add_option("--families", family_list, "Comma-separated tags (default: all but S)");

  auto* cayley = app.add_subcommand("cayley", "Multiplication table");
  add_instance(cayley);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    Budgets budgets = budget_spec.empty() ? Budgets::from_env() : Budgets::parse(budget_spec, Budgets::from_env());
    Output  out;
    if (*info) {
      out = cmd_info(family_arg(family), degree, budgets);
    } else if (*maximal) {
      out = cmd_maximal(family_arg(family), degree, mode, !no_cross, budgets);
    } else if (*table1) {
      std::vector<Family> fams;
      if (family_list.empty()) {
        for (Family f : all_families) {
          if (f != Family::S) {
            fams.push_back(f);
          }
        }
      } else {
        std::stringstream ss(family_list);
        for (std::string tag; std::getline(ss, tag, ',');) {
          fams.push_back(family_arg(tag));
        }
      }
      auto range = degree_range(degrees);
      if (range.first < 1 || range.second < range.first) {
        throw CLI::ValidationError("--degrees", "empty or non-positive range");
      }
      out = cmd_table1(range, fams, budgets);
    } else {
      out = cmd_cayley(family_arg(family), degree, budgets);
    }
    std::string body = format == "json"  ? out.doc.dump(2) + "\n"
                       : format == "csv" ? (out.csv.empty() ? out.doc.dump() + "\n" : out.csv)
                                         : out.text;
    if (output.empty()) {
      std::cout << body;
    } else {
      std::ofstream(output) << body;
    }
    return out.code;
  } catch (CLI::Error const& e) {
    app.exit(e);
    return usage;
  } catch (CapacityError const& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return capacity;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
