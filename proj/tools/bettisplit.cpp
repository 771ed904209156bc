// bettisplit: Betti numbers, Betti splittings, Alexander duals and fat points
// from the command line.
//
// Exit codes: 0 success, 1 verdict false, 2 bad input or unmet hypothesis,
// 3 resource cap hit, 4 internal invariant violated.

#include "bettisplit/betti.hpp"
#include "bettisplit/errors.hpp"
#include "bettisplit/fat_points.hpp"
#include "bettisplit/io.hpp"
#include "bettisplit/simplicial.hpp"
#include "bettisplit/splitting.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace bettisplit;

namespace {

struct Globals {
  std::uint32_t field = FieldSpec::default_prime;
  std::string format = "triangle";
  std::size_t jobs = 1;

  FieldSpec field_spec() const { return FieldSpec::from_characteristic(field); }
  TableFormat table_format() const { return parse_table_format(format); }
  ComputeOptions options() const {
    ComputeOptions o;
    o.jobs = jobs == 0 ? 1 : jobs;
    return o;
  }
};

MonomialIdeal load_ideal(const std::string& path) {
  auto doc = parse_ideal_document(read_text_file(path));
  for (const auto& w : doc.warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  return std::move(doc.ideal);
}

ComplexDocument load_complex(const std::string& path) {
  auto doc = parse_complex_document(read_text_file(path));
  for (const auto& w : doc.warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  return doc;
}

std::string generators_line(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators())
    out += (out.empty() ? "" : ", ") + g.to_string();
  return out.empty() ? "0" : out;
}

int print_report(const SplittingReport& report) {
  if (report.verdict) {
    std::cout << "Betti splitting: yes\n";
    return 0;
  }
  const auto [i, j] = *report.witness;
  std::cout << "Betti splitting: no\n"
            << "first failure at (i,j) = (" << i << "," << j << "): beta(I) = " << report.table_i(i, j)
            << ", beta(J) + beta(K) + beta_{i-1}(J∩K) = " << report.table_j(i, j) << " + " << report.table_k(i, j)
            << " + " << report.table_intersection(i - 1, j) << "\n";
  return 1;
}

FatPointParams fat_params(std::size_t n, unsigned a, unsigned b, unsigned c) {
  FatPointParams p{n, a, b, c};
  p.validate();
  return p;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers and Betti splittings of monomial ideals"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--field", g.field, "0 for exact rationals, otherwise a prime (default 32003)");
  app.add_option("--format", g.format, "triangle, resolution, csv or json")
      ->check(CLI::IsMember({"triangle", "resolution", "csv", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads; never changes the output");

  std::function<int()> action;

  // betti
  auto* betti = app.add_subcommand("betti", "graded Betti table of an ideal");
  std::string ideal_path;
  betti->add_option("ideal", ideal_path, "ideal file")->required();
  betti->callback([&] {
    action = [&] {
      const auto table = graded_betti(load_ideal(ideal_path), g.field_spec(), g.options());
      std::cout << render_betti_table(table, g.table_format());
      return 0;
    };
  });

  // split
  auto* split = app.add_subcommand("split", "Betti splittings I = J + K");
  split->require_subcommand(1);

  auto* verify = split->add_subcommand("verify", "check a given partition");
  std::string j_path, k_path;
  verify->add_option("I", ideal_path)->required();
  verify->add_option("J", j_path)->required();
  verify->add_option("K", k_path)->required();
  verify->callback([&] {
    action = [&] {
      return print_report(is_betti_splitting(load_ideal(ideal_path), load_ideal(j_path), load_ideal(k_path),
                                             g.field_spec(), g.options()));
    };
  });

  auto* xi = split->add_subcommand("xi", "x_i-partition by divisibility");
  VarIndex var = 0;
  xi->add_option("I", ideal_path)->required();
  xi->add_option("--var", var, "variable index; without it every variable is tried");
  xi->callback([&] {
    action = [&] {
      const auto ideal = load_ideal(ideal_path);
      if (var == 0) {
        const auto vars = admits_xi_splitting(ideal, g.field_spec(), g.options());
        std::cout << "x_i-splittings:";
        for (VarIndex v : vars)
          std::cout << " x" << v;
        std::cout << (vars.empty() ? " none\n" : "\n");
        return vars.empty() ? 1 : 0;
      }
      const auto [j, k] = xi_split(ideal, var);
      std::cout << "J = (" << generators_line(j) << ")\nK = (" << generators_line(k) << ")\n";
      return print_report(is_betti_splitting(ideal, j, k, g.field_spec(), g.options()));
    };
  });

  auto* search = split->add_subcommand("search", "try every partition of G(I)");
  std::size_t limit = 0;
  std::size_t bound = 20;
  search->add_option("I", ideal_path)->required();
  search->add_option("--limit", limit, "stop after this many splittings (0 = all)");
  search->add_option("--max-generators", bound, "refuse ideals with more generators");
  search->callback([&] {
    action = [&] {
      const auto ideal = load_ideal(ideal_path);
      const auto result = search_betti_splittings(ideal, g.field_spec(), limit, g.options(), bound);
      for (const auto& s : result.splittings)
        std::cout << "J = (" << generators_line(s.j) << ")  K = (" << generators_line(s.k) << ")\n";
      std::cout << result.splittings.size() << "/" << result.partitions_examined << " partitions split\n";
      std::cerr << "unordered partitions: " << result.unordered_partitions
                << ", choices of J with |G(J)| <= |G(I)|/2: " << result.size_limited_choices << "\n";
      return 0;
    };
  });

  // complex
  auto* cx = app.add_subcommand("complex", "simplicial complexes through Alexander duality");
  cx->require_subcommand(1);
  std::string complex_path, first_path, second_path;

  auto* dual = cx->add_subcommand("dual", "Alexander dual ideal");
  dual->add_option("complex", complex_path)->required();
  dual->callback([&] {
    action = [&] {
      std::cout << render_ideal(alexander_dual_ideal(load_complex(complex_path).complex));
      return 0;
    };
  });

  auto* vd = cx->add_subcommand("vd", "vertex decomposability");
  vd->add_option("complex", complex_path)->required();
  vd->callback([&] {
    action = [&] {
      const auto result = is_vertex_decomposable(load_complex(complex_path).complex);
      if (!result.decomposable) {
        std::cout << "vertex decomposable: no\n";
        return 1;
      }
      std::cout << "vertex decomposable: yes\nshedding sequence:";
      for (VertexIndex v : result.shedding_sequence)
        std::cout << " " << v;
      std::cout << "\n";
      return 0;
    };
  });

  auto* shell = cx->add_subcommand("shelling", "check or search for a shelling order");
  std::string order = "search";
  shell->add_option("complex", complex_path)->required();
  shell->add_option("--order", order, "given: the file order; search: backtracking")
      ->check(CLI::IsMember({"given", "search"}));
  shell->callback([&] {
    action = [&] {
      const auto doc = load_complex(complex_path);
      if (order == "given") {
        const bool ok = verify_shelling(doc.complex, doc.facet_order);
        std::cout << "given order is a shelling: " << (ok ? "yes" : "no") << "\n";
        return ok ? 0 : 1;
      }
      const auto found = find_shelling(doc.complex);
      if (!found) {
        std::cout << "shellable: no\n";
        return 1;
      }
      std::cout << "shellable: yes\n" << render_facets(*found, doc.complex.n_vertices());
      return 0;
    };
  });

  auto* scm = cx->add_subcommand("scm", "sequential Cohen-Macaulayness via the dual ideal");
  scm->add_option("complex", complex_path)->required();
  scm->callback([&] {
    action = [&] {
      const bool ok = is_sequentially_cm(load_complex(complex_path).complex, g.field_spec(), g.options());
      std::cout << "sequentially Cohen-Macaulay over " << g.field_spec().name() << ": " << (ok ? "yes" : "no")
                << "\n";
      return ok ? 0 : 1;
    };
  });

  auto* union_split = cx->add_subcommand("union-split", "Betti splitting induced by D = D1 ∪ D2");
  union_split->add_option("D", complex_path)->required();
  union_split->add_option("D1", first_path)->required();
  union_split->add_option("D2", second_path)->required();
  union_split->callback([&] {
    action = [&] {
      return print_report(union_splitting_check(load_complex(complex_path).complex,
                                                load_complex(first_path).complex,
                                                load_complex(second_path).complex, g.field_spec(), g.options()));
    };
  });

  // fatpoints
  auto* fat = app.add_subcommand("fatpoints", "three fat coordinate points in P^{n-1}");
  fat->require_subcommand(1);
  std::size_t n = 4;
  unsigned a = 1, b = 1, c = 1;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of variables")->required();
    sub->add_option("--a", a, "smallest multiplicity")->required();
    sub->add_option("--b", b, "middle multiplicity")->required();
    sub->add_option("--c", c, "largest multiplicity")->required();
  };

  auto* fat_ideal = fat->add_subcommand("ideal", "generators of I_{n,a,b,c}");
  add_params(fat_ideal);
  fat_ideal->callback([&] {
    action = [&] {
      std::cout << render_ideal(fat_points_ideal(fat_params(n, a, b, c)));
      return 0;
    };
  });

  auto* fat_betti = fat->add_subcommand("betti", "Betti table from the direct engine");
  add_params(fat_betti);
  fat_betti->callback([&] {
    action = [&] {
      const auto table = graded_betti(fat_points_ideal(fat_params(n, a, b, c)), g.field_spec(), g.options());
      std::cout << render_betti_table(table, g.table_format());
      return 0;
    };
  });

  auto* fat_closed = fat->add_subcommand("closed-form", "Betti table from the closed formulas");
  add_params(fat_closed);
  fat_closed->callback([&] {
    action = [&] {
      std::cout << render_betti_table(closed_form_table(fat_params(n, a, b, c), g.field_spec(), g.options()),
                                      g.table_format());
      return 0;
    };
  });

  auto* fat_compare = fat->add_subcommand("compare", "closed forms vs splitting recursion vs direct engine");
  add_params(fat_compare);
  fat_compare->callback([&] {
    action = [&] {
      const auto p = fat_params(n, a, b, c);
      const auto closed = closed_form_table(p, g.field_spec(), g.options());
      const auto recursive = betti_recursive(p, g.field_spec(), g.options());
      const auto direct = graded_betti(fat_points_ideal(p), g.field_spec(), g.options());
      if (closed == recursive && recursive == direct) {
        std::cout << "closed-form == recursion == direct: OK\n";
        return 0;
      }
      std::cout << "closed-form == recursion == direct: MISMATCH\n"
                << "closed-form:\n"
                << render_betti_table(closed, TableFormat::triangle) << "recursion:\n"
                << render_betti_table(recursive, TableFormat::triangle) << "direct:\n"
                << render_betti_table(direct, TableFormat::triangle);
      return 1;
    };
  });

  auto* fat_split = fat->add_subcommand("split", "check the x1-splitting J = x1 I_{n,a,b-1,c-1} + K");
  add_params(fat_split);
  fat_split->callback([&] {
    action = [&] {
      const auto check = verify_theorem51_split(fat_params(n, a, b, c), g.field_spec(), g.options());
      std::cout << "J = (" << generators_line(check.j) << ")\nK = (" << generators_line(check.k) << ")\n"
                << "J componentwise linear: " << (check.j_componentwise_linear ? "yes" : "no") << "\n"
                << "K componentwise linear: " << (check.k_componentwise_linear ? "yes" : "no") << "\n";
      return print_report(check.report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
