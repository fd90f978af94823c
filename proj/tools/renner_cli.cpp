// Command-line front end: describe, irreps, character and verify.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renner/algebra.hpp"
#include "renner/element_io.hpp"
#include "renner/error.hpp"
#include "renner/monoid.hpp"
#include "renner/oracle.hpp"
#include "renner/rep.hpp"

using namespace renner;
using nlohmann::json;

namespace {

  struct JobConfig {
    std::string              family;
    int                      rank = 0;
    std::string              J;
    std::string              format = "json";
    std::size_t              max_order  = WeylGroup::default_bound;
    std::size_t              max_monoid = Bounds{}.max_monoid;
    bool                     matrices   = false;
    std::vector<std::string> elements;
    int                      entry = -1;
    std::size_t              exhaustive_bound = SuiteOptions{}.exhaustive_bound;
    std::size_t              samples          = SuiteOptions{}.sample_pairs;
  };

  // "2,3" -> {1, 2}; the empty string is the empty set.
  RootSubset parse_J(std::string const& text) {
    RootSubset  J;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      int         v   = 0;
      try {
        v = std::stoi(item, &pos);
      } catch (std::exception const&) {
        throw Error(ErrorCode::BadJ, "J must be a comma-separated list of integers, got '"
                                         + text + "'");
      }
      if (pos != item.size() || v < 1) {
        throw Error(ErrorCode::BadJ, "bad simple-root index '" + item + "'");
      }
      J.push_back(v - 1);
    }
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
  }

  json one_based(RootSubset const& X) {
    json out = json::array();
    for (int a : X) {
      out.push_back(a + 1);
    }
    return out;
  }

  struct Context {
    JobConfig    cfg;
    RootSubset   J;
    RennerMonoid R;

    explicit Context(JobConfig const& c) : cfg(c), J(parse_J(c.J)) {
      Bounds b;
      b.max_group  = c.max_order;
      b.max_monoid = c.max_monoid;
      R            = build_monoid(parse_family(c.family), c.rank, J, b);
    }

    json header() const {
      return {{"family", std::string(1, to_char(R.group().datum().family))},
              {"rank", R.group().datum().rank},
              {"J", one_based(J)}};
    }
  };

  void emit(JobConfig const& cfg, json const& j, std::string const& text) {
    if (cfg.format == "json") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  void require_not_csv(JobConfig const& cfg) {
    if (cfg.format == "csv") {
      throw Error(ErrorCode::IndexOutOfRange,
                  "csv output is only available for the character command");
    }
  }

  int cmd_describe(JobConfig const& cfg) {
    require_not_csv(cfg);
    Context const              ctx(cfg);
    RennerMonoid const&        R = ctx.R;
    FaceLattice const&         F = R.faces();
    CrossSectionLattice const& L = R.cross_section();

    json lattice = json::array();
    for (std::size_t e = 0; e < L.size(); ++e) {
      json item = {{"entry", e},
                   {"zero", L[e].is_zero},
                   {"lambda_star", one_based(L[e].lambda_star)},
                   {"lambda_substar", one_based(L[e].lambda_substar)},
                   {"d_e", L[e].d_e},
                   {"W_star_order", L[e].W_star.order()},
                   {"class_size", R.class_ids(e).size()}};
      item["lambda"] = L[e].is_zero ? json(nullptr) : one_based(L[e].lambda);
      json above     = json::array();
      for (std::size_t g = 0; g < L.size(); ++g) {
        if (L.leq[e][g]) {
          above.push_back(g);
        }
      }
      item["below_or_equal_to"] = above;
      lattice.push_back(std::move(item));
    }
    json vertices = json::array();
    for (auto const& v : F.vertices().coords()) {
      json c = json::array();
      for (auto const& q : v) {
        c.push_back(q.get_str());
      }
      vertices.push_back(c);
    }
    json faces = json::array();
    for (auto const& f : F.faces()) {
      json vs = json::array();
      for (VertexId v : f.vertices) {
        vs.push_back(v + 1);
      }
      faces.push_back({{"dim", f.dim}, {"vertices", vs}});
    }
    json j = ctx.header();
    j["group_order"]  = R.group().size();
    j["monoid_order"] = R.size();
    j["f_vector"]     = F.f_vector();
    j["lattice"]      = lattice;
    j["vertices"]     = vertices;
    j["faces"]        = faces;

    std::ostringstream os;
    os << "type " << R.group().datum().name() << ", J = " << to_string(ctx.J) << '\n'
       << "|W| = " << R.group().size() << ", |R| = " << R.size() << '\n'
       << "f-vector:";
    for (auto x : F.f_vector()) {
      os << ' ' << x;
    }
    os << "\nentry  lambda*     lambda_*    d_e  |W*|  |WeW|\n";
    for (std::size_t e = 0; e < L.size(); ++e) {
      os << e << "      " << (L[e].is_zero ? "zero" : to_string(L[e].lambda_star)) << "  "
         << to_string(L[e].lambda_substar) << "  " << L[e].d_e << "  "
         << L[e].W_star.order() << "  " << R.class_ids(e).size() << '\n';
    }
    emit(cfg, j, os.str());
    return 0;
  }

  int cmd_irreps(JobConfig const& cfg) {
    require_not_csv(cfg);
    Context const              ctx(cfg);
    MonoidAlgebra const        A(ctx.R);
    RepresentationTheory const T(A, cfg.matrices);
    json                       j = ctx.header();
    j.update(irreducible_inventory(T));

    std::ostringstream os;
    for (auto const& irr : T.irreducibles()) {
      os << "entry " << irr.entry << "  " << irr.label << "  deg " << irr.degree
         << "  induced " << irr.induced_degree << '\n';
    }
    os << "sum of squared degrees = " << j["sum_of_squares"].get<std::size_t>()
       << " (|R| = " << ctx.R.size() << ")\n";
    emit(cfg, j, os.str());
    return 0;
  }

  int cmd_character(JobConfig const& cfg) {
    Context const              ctx(cfg);
    RennerMonoid const&        R = ctx.R;
    MonoidAlgebra const        A(R);
    RepresentationTheory const T(A);
    if (cfg.entry >= static_cast<int>(R.cross_section().size())) {
      throw Error(ErrorCode::IndexOutOfRange, "no entry " + std::to_string(cfg.entry));
    }
    std::vector<Irreducible> chars;
    for (auto const& irr : T.irreducibles()) {
      if (cfg.entry < 0 || irr.entry == static_cast<std::size_t>(cfg.entry)) {
        chars.push_back(irr);
      }
    }
    json characters = json::array();
    for (auto const& irr : chars) {
      characters.push_back({{"entry", irr.entry},
                            {"label", irr.label},
                            {"degree", irr.degree},
                            {"induced_degree", irr.induced_degree}});
    }
    auto values_at = [&](std::size_t s) {
      std::vector<long> v;
      for (auto const& irr : chars) {
        v.push_back(T.chi_star(irr.entry, irr.row, s));
      }
      return v;
    };

    // Columns: the given elements, or all of R grouped by equal values.
    struct Column {
      std::string       element;
      std::size_t       size = 1;
      std::vector<long> values;
    };
    std::vector<Column> columns;
    bool const          grouped = cfg.elements.empty();
    if (!grouped) {
      for (auto const& text : cfg.elements) {
        std::size_t const s = R.id_of(parse_element(R, text));
        columns.push_back({format_element(R, R.element(s)), 1, values_at(s)});
      }
    } else {
      std::map<std::vector<long>, std::size_t> seen;
      for (std::size_t s = 0; s < R.size(); ++s) {
        std::vector<long> v = values_at(s);
        auto [it, fresh]    = seen.emplace(v, columns.size());
        if (fresh) {
          columns.push_back({format_element(R, R.element(s)), 1, std::move(v)});
        } else {
          ++columns[it->second].size;
        }
      }
    }

    if (cfg.format == "csv") {
      std::cout << "element" << (grouped ? ",size" : "");
      for (auto const& irr : chars) {
        std::cout << ",\"" << irr.entry << ':' << irr.label << '"';
      }
      std::cout << '\n';
      for (auto const& c : columns) {
        std::cout << '"' << c.element << '"';
        if (grouped) {
          std::cout << ',' << c.size;
        }
        for (long x : c.values) {
          std::cout << ',' << x;
        }
        std::cout << '\n';
      }
      return 0;
    }
    json cols = json::array();
    for (auto const& c : columns) {
      json item = {{"element", c.element}, {"values", c.values}};
      if (grouped) {
        item["size"] = c.size;
      }
      cols.push_back(std::move(item));
    }
    json j          = ctx.header();
    j["characters"] = characters;
    j[grouped ? "groups" : "elements"] = cols;

    std::ostringstream os;
    for (auto const& c : columns) {
      os << c.element;
      if (grouped) {
        os << "  (" << c.size << " elements)";
      }
      os << '\n';
      for (std::size_t k = 0; k < chars.size(); ++k) {
        os << "  entry " << chars[k].entry << "  " << chars[k].label << "  " << c.values[k]
           << '\n';
      }
    }
    emit(cfg, j, os.str());
    return 0;
  }

  int cmd_verify(JobConfig const& cfg) {
    require_not_csv(cfg);
    Context const ctx(cfg);
    SuiteOptions  opts;
    opts.exhaustive_bound = cfg.exhaustive_bound;
    opts.sample_pairs     = cfg.samples;
    SuiteReport r = exhaustive_property_suite(ctx.R, opts);
    json        j = ctx.header();
    j["monoid_order"] = ctx.R.size();
    j["passed"]       = r.passed;
    j["checks"]       = r.checks;

    std::ostringstream os;
    for (auto const& c : r.checks) {
      os << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["check"].get<std::string>();
      if (c.contains("witness")) {
        os << ": " << c["witness"].get<std::string>();
      }
      os << '\n';
    }
    emit(cfg, j, os.str());
    return r.passed ? 0 : 1;
  }

  int exit_code(ErrorCode c) {
    switch (c) {
      case ErrorCode::BadElement:
        return 3;
      case ErrorCode::BadJ:
      case ErrorCode::UnsupportedType:
      case ErrorCode::UnsupportedComponent:
      case ErrorCode::IndexOutOfRange:
      case ErrorCode::GroupTooLarge:
        return 2;
      default:
        return 4;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renner monoids: structure, irreducible representations and characters"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Root system family A, B, C or D")->required();
    sub->add_option("--rank", cfg.rank, "Rank n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--J", cfg.J, "Simple roots fixing the weight, 1-based, e.g. 2,3")
        ->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--max-order", cfg.max_order, "Largest Weyl group to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-monoid", cfg.max_monoid, "Largest monoid to enumerate")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* describe = app.add_subcommand("describe", "Cross-section lattice, faces, orders");
  common(describe);
  CLI::App* irreps = app.add_subcommand("irreps", "Inventory of irreducible representations");
  common(irreps);
  irreps->add_flag("--matrices", cfg.matrices,
                   "Require explicit matrices (fails for type D components)");
  CLI::App* character = app.add_subcommand("character", "Values of the induced characters");
  common(character);
  character->add_option("--element", cfg.elements,
                        "face=[...];images=[...] or zero; repeatable");
  character->add_option("--entry", cfg.entry, "Restrict to one cross-section entry id")
      ->check(CLI::NonNegativeNumber);
  CLI::App* verify = app.add_subcommand("verify", "Run the brute-force property suite");
  common(verify);
  verify->add_option("--exhaustive-bound", cfg.exhaustive_bound,
                     "Largest |R| for complete pair checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", cfg.samples, "Pairs drawn above the bound")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) {
      return cmd_describe(cfg);
    }
    if (irreps->parsed()) {
      return cmd_irreps(cfg);
    }
    if (character->parsed()) {
      return cmd_character(cfg);
    }
    return cmd_verify(cfg);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
