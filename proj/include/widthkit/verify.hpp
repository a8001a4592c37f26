#ifndef WIDTHKIT_VERIFY_HPP
#define WIDTHKIT_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "compile.hpp"
#include "exact.hpp"
#include "gf2.hpp"
#include "graph.hpp"
#include "minors.hpp"
#include "nabla.hpp"
#include "planarity.hpp"
#include "solvers.hpp"
#include "version.hpp"

namespace widthkit {

struct NamedGraph {
    std::string id;
    Graph graph;
};

/// Free-form key=value parameters for a bound spec; rationals are exact.
class BoundParams {
public:
    BoundParams() = default;
    explicit BoundParams(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    bool has(const std::string& k) const { return kv_.count(k) > 0; }

    int get_int(const std::string& k) const {
        auto it = kv_.find(k);
        if (it == kv_.end()) throw std::invalid_argument("missing parameter '" + k + "'");
        return std::stoi(it->second);
    }
    int get_int(const std::string& k, int dflt) const { return has(k) ? get_int(k) : dflt; }

    exact::Rat get_rat(const std::string& k) const {
        auto it = kv_.find(k);
        if (it == kv_.end()) throw std::invalid_argument("missing parameter '" + k + "'");
        return exact::parse_rational(it->second);
    }
    exact::Rat get_rat(const std::string& k, const exact::Rat& dflt) const {
        return has(k) ? get_rat(k) : dflt;
    }

    const std::map<std::string, std::string>& raw() const { return kv_; }

    /// Parses "r=2,tau=4.51" style parameter lists.
    static BoundParams parse(const std::string& text) {
        std::map<std::string, std::string> kv;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (!item.empty()) {
                std::size_t eq = item.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad parameter item '" + item + "'");
                kv[item.substr(0, eq)] = item.substr(eq + 1);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return BoundParams(std::move(kv));
    }

private:
    std::map<std::string, std::string> kv_;
};

struct GraphRow {
    std::string id;
    int n = 0, m = 0;
    bool member = false;
    bool membership_checked = true;
    bool skipped = false;
    std::string skip_reason;
    std::string lhs, rhs;
    bool satisfied = true;
    double ratio = 0.0;  // lhs/rhs, informational only
};

struct VerificationReport {
    std::string spec_id;
    BoundParams params;
    bool asserted = true;  // report-only specs never fail a run
    std::string comparator;
    std::vector<GraphRow> rows;
    std::size_t checked = 0, skipped = 0, violations = 0;
    double max_ratio = 0.0;
    long long runtime_ms = 0;
};

namespace detail {

struct SpecContext {
    const Graph* g = nullptr;
    std::optional<int> rwd_, twd_;
    std::optional<CompiledKExpression> compiled_;
    std::optional<RankwidthResult> rwres_;

    int rwd() {
        if (!rwd_) {
            rwres_ = exact_rankwidth(*g);
            rwd_ = rwres_->width;
        }
        return *rwd_;
    }
    int twd() {
        if (!twd_) twd_ = exact_treewidth(*g).width;
        return *twd_;
    }
    const CompiledKExpression& compiled() {
        if (!compiled_) {
            rwd();
            compiled_ = rankdec_to_kexpr(*g, rwres_->decomposition);
        }
        return *compiled_;
    }
    int compiled_width() { return compiled().expr.width(); }
};

struct SpecDef {
    std::string description;
    std::string comparator;
    bool asserted = true;
    bool needs_edge = false;  // skip edgeless graphs (bounds assume rwd >= 1)
    std::function<bool(const Graph&, const BoundParams&)> member;
    // fills lhs/rhs/ratio, returns satisfied
    std::function<bool(SpecContext&, const BoundParams&, GraphRow&)> check;
};

inline double rat_to_double(const exact::Rat& r) {
    return boost::multiprecision::numerator(r).convert_to<double>() /
           boost::multiprecision::denominator(r).convert_to<double>();
}

inline void fill(GraphRow& row, const exact::Rat& lhs, const exact::Rat& rhs) {
    row.lhs = exact::to_string(lhs);
    row.rhs = exact::to_string(rhs);
    double d = rat_to_double(rhs);
    row.ratio = d != 0 ? rat_to_double(lhs) / d : 0.0;
}

inline void fill_approx(GraphRow& row, const exact::Rat& lhs, const std::string& rhs_desc,
                        double rhs_approx) {
    row.lhs = exact::to_string(lhs);
    row.rhs = rhs_desc;
    row.ratio = rhs_approx != 0 ? rat_to_double(lhs) / rhs_approx : 0.0;
}

inline const std::map<std::string, SpecDef>& spec_registry() {
    static const std::map<std::string, SpecDef> registry = [] {
        std::map<std::string, SpecDef> reg;

        reg["eq1"] = {"rank-width is at most tree-width plus one",
                      "<=",
                      true,
                      false,
                      [](const Graph&, const BoundParams&) { return true; },
                      [](SpecContext& c, const BoundParams&, GraphRow& row) {
                          exact::Rat lhs(c.rwd()), rhs(c.twd() + 1);
                          fill(row, lhs, rhs);
                          return lhs <= rhs;
                      }};

        reg["eq2_upper"] = {"compiled expression width is at most 2^{rwd+1}-1",
                            "<=",
                            true,
                            false,
                            [](const Graph&, const BoundParams&) { return true; },
                            [](SpecContext& c, const BoundParams&, GraphRow& row) {
                                exact::Rat lhs(c.compiled_width());
                                exact::Rat rhs(exact::ipow(2, static_cast<unsigned>(c.rwd() + 1)) -
                                               1);
                                fill(row, lhs, rhs);
                                return lhs <= rhs;
                            }};

        reg["eq2_cert"] = {"rank-width is at most the compiled expression width",
                           "<=",
                           true,
                           false,
                           [](const Graph&, const BoundParams&) { return true; },
                           [](SpecContext& c, const BoundParams&, GraphRow& row) {
                               exact::Rat lhs(c.rwd()), rhs(c.compiled_width());
                               fill(row, lhs, rhs);
                               return lhs <= rhs;
                           }};

        reg["eq3"] = {"Gurski-Wanke: twd+1 <= 3(r-1) * compiled width on K_{r,r}-free graphs",
                      "<=",
                      true,
                      false,
                      [](const Graph& g, const BoundParams& p) {
                          return !has_krr_subgraph(g, p.get_int("r"));
                      },
                      [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                          int r = p.get_int("r");
                          exact::Rat lhs(c.twd() + 1);
                          exact::Rat rhs(exact::Int(3) * (r - 1) * c.compiled_width());
                          fill(row, lhs, rhs);
                          return lhs <= rhs;
                      }};

        reg["eq4"] = {"twd+1 <= 3(r-1)(2^{rwd+1}-1) on K_{r,r}-free graphs",
                      "<=",
                      true,
                      false,
                      [](const Graph& g, const BoundParams& p) {
                          return !has_krr_subgraph(g, p.get_int("r"));
                      },
                      [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                          int r = p.get_int("r");
                          exact::Rat lhs(c.twd() + 1);
                          exact::Rat rhs(exact::Int(3) * (r - 1) *
                                         (exact::ipow(2, static_cast<unsigned>(c.rwd() + 1)) - 1));
                          fill(row, lhs, rhs);
                          return lhs <= rhs;
                      }};

        reg["thm_planar"] = {"planar graphs: twd < 72 rwd - 1",
                             "<",
                             true,
                             true,
                             [](const Graph& g, const BoundParams&) { return is_planar(g); },
                             [](SpecContext& c, const BoundParams&, GraphRow& row) {
                                 exact::Rat lhs(c.twd());
                                 exact::Rat rhs(bounds::bound_planar(c.rwd()));
                                 fill(row, lhs, rhs);
                                 return lhs < rhs;
                             }};

        reg["thm_planar_cwd"] = {"planar graphs: compiled width < 12 rwd",
                                 "<",
                                 true,
                                 true,
                                 [](const Graph& g, const BoundParams&) { return is_planar(g); },
                                 [](SpecContext& c, const BoundParams&, GraphRow& row) {
                                     exact::Rat lhs(c.compiled_width());
                                     exact::Rat rhs(exact::Int(12) * c.rwd());
                                     fill(row, lhs, rhs);
                                     return lhs < rhs;
                                 }};

        reg["thm_genus"] = {"genus <= g: twd+1 < 3(2+sqrt(2g))(6 rwd + 5g)",
                            "<",
                            true,
                            true,
                            [](const Graph& g, const BoundParams& p) {
                                int genus = p.get_int("g");
                                return genus == 0 ? is_planar(g) : true;  // g>0 taken on trust
                            },
                            [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                int genus = p.get_int("g");
                                bool ok = bounds::genus_twd_ok(c.twd(), c.rwd(), genus);
                                fill_approx(row, exact::Rat(c.twd() + 1),
                                            "3(2+sqrt(2g))(6 rwd+5g), g=" + std::to_string(genus),
                                            bounds::bound_genus_twd_approx(c.rwd(), genus));
                                return ok;
                            }};

        reg["thm_genus_cwd"] = {"genus <= g: compiled width < 12 rwd + 10 g",
                                "<",
                                true,
                                true,
                                [](const Graph& g, const BoundParams& p) {
                                    int genus = p.get_int("g");
                                    return genus == 0 ? is_planar(g) : true;
                                },
                                [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                    exact::Rat lhs(c.compiled_width());
                                    exact::Rat rhs(
                                        bounds::bound_genus_cwd(c.rwd(), p.get_int("g")));
                                    fill(row, lhs, rhs);
                                    return lhs < rhs;
                                }};

        reg["thm_minor"] = {"no K_r minor: twd+1 < 6(r-2) 2^{mu r loglog r} rwd (report only)",
                            "<",
                            false,
                            true,
                            [](const Graph& g, const BoundParams& p) {
                                return !has_minor(g, p.get_int("r"));
                            },
                            [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                int r = p.get_int("r");
                                exact::Rat mu = p.get_rat("mu");
                                bool ok = bounds::minor_twd_ok(c.twd(), c.rwd(), r, mu);
                                fill_approx(row, exact::Rat(c.twd() + 1),
                                            "6(r-2) 2^{mu r loglog r} rwd",
                                            bounds::bound_minor_twd_approx(
                                                c.rwd(), r, rat_to_double(mu)));
                                return ok;
                            }};

        reg["thm_minor_cwd"] = {"no K_r minor: cwd cert < 2 * 2^{mu r loglog r} rwd (report only)",
                                "<",
                                false,
                                true,
                                [](const Graph& g, const BoundParams& p) {
                                    return !has_minor(g, p.get_int("r"));
                                },
                                [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                    int r = p.get_int("r");
                                    exact::Rat mu = p.get_rat("mu");
                                    bool ok =
                                        bounds::minor_cwd_ok(c.compiled_width(), c.rwd(), r, mu);
                                    fill_approx(row, exact::Rat(c.compiled_width()),
                                                "2 * 2^{mu r loglog r} rwd",
                                                2.0 *
                                                    std::pow(2.0, rat_to_double(mu) * r *
                                                                      std::log2(std::log2(r))) *
                                                    c.rwd());
                                    return ok;
                                }};

        reg["thm_topminor"] = {"no K_r topological minor: twd+1 < (3/4)(r^2+4r-5) 2^{tau r log r} rwd",
                               "<",
                               true,
                               true,
                               [](const Graph& g, const BoundParams& p) {
                                   return !has_topological_minor(g, p.get_int("r"));
                               },
                               [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                   int r = p.get_int("r");
                                   exact::Rat tau = p.get_rat("tau", exact::Rat(451, 100));
                                   bool ok = bounds::topminor_twd_ok(c.twd(), c.rwd(), r, tau);
                                   fill_approx(row, exact::Rat(c.twd() + 1),
                                               "(3/4)(r^2+4r-5) 2^{tau r log r} rwd",
                                               bounds::bound_topminor_twd_approx(
                                                   c.rwd(), r, rat_to_double(tau)));
                                   return ok;
                               }};

        reg["thm_topminor_cwd"] = {"no K_r topological minor: cwd cert < 2 * 2^{tau r log r} rwd",
                                   "<",
                                   true,
                                   true,
                                   [](const Graph& g, const BoundParams& p) {
                                       return !has_topological_minor(g, p.get_int("r"));
                                   },
                                   [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                       int r = p.get_int("r");
                                       exact::Rat tau = p.get_rat("tau", exact::Rat(451, 100));
                                       bool ok = bounds::topminor_cwd_ok(c.compiled_width(),
                                                                         c.rwd(), r, tau);
                                       fill_approx(
                                           row, exact::Rat(c.compiled_width()),
                                           "2 * 2^{tau r log r} rwd",
                                           2.0 *
                                               std::pow(2.0, rat_to_double(tau) * r *
                                                                 std::log2(r)) *
                                               c.rwd());
                                       return ok;
                                   }};

        reg["thm_nabla1"] = {"nabla1 <= r: twd+1 < 12 r 4^r rwd",
                             "<",
                             true,
                             true,
                             [](const Graph& g, const BoundParams& p) {
                                 return nabla1(g) <= exact::Rat(p.get_int("r"));
                             },
                             [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                 exact::Rat lhs(c.twd() + 1);
                                 exact::Rat rhs(bounds::bound_nabla1_twd(c.rwd(), p.get_int("r")));
                                 fill(row, lhs, rhs);
                                 return lhs < rhs;
                             }};

        reg["thm_nabla1_cwd"] = {"nabla1 <= r: compiled width < 2 * 4^r rwd",
                                 "<",
                                 true,
                                 true,
                                 [](const Graph& g, const BoundParams& p) {
                                     return nabla1(g) <= exact::Rat(p.get_int("r"));
                                 },
                                 [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                     exact::Rat lhs(c.compiled_width());
                                     exact::Rat rhs(
                                         bounds::bound_nabla1_cwd(c.rwd(), p.get_int("r")));
                                     fill(row, lhs, rhs);
                                     return lhs < rhs;
                                 }};

        reg["thm_krr"] = {"no K_{r,r} subgraph: twd+1 < 3(r-1)(2(r-2)/(r+1) C(rwd,r) + 2 sum C(rwd,i))",
                          "<",
                          true,
                          true,
                          [](const Graph& g, const BoundParams& p) {
                              return !has_krr_subgraph(g, p.get_int("r"));
                          },
                          [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                              exact::Rat lhs(c.twd() + 1);
                              exact::Rat rhs = bounds::bound_krr_twd(c.rwd(), p.get_int("r"));
                              fill(row, lhs, rhs);
                              return lhs < rhs;
                          }};

        reg["thm_krr_cwd"] = {"no K_{r,r} subgraph: compiled width < the K_{r,r} cwd bound",
                              "<",
                              true,
                              true,
                              [](const Graph& g, const BoundParams& p) {
                                  return !has_krr_subgraph(g, p.get_int("r"));
                              },
                              [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                                  exact::Rat lhs(c.compiled_width());
                                  exact::Rat rhs = bounds::bound_krr_cwd(c.rwd(), p.get_int("r"));
                                  fill(row, lhs, rhs);
                                  return lhs < rhs;
                              }};

        reg["lemma31"] = {"every cut: distinct rows <= lambda_G(cutrank)",
                          "<=",
                          true,
                          false,
                          [](const Graph&, const BoundParams&) { return true; },
                          [](SpecContext& c, const BoundParams&, GraphRow& row) {
                              const Graph& g = *c.g;
                              int n = g.vertex_count();
                              if (n > 16) throw resource_limit_error("lemma31 sweep needs n <= 16", 16);
                              auto adj = g.adjacency_masks();
                              std::uint64_t full =
                                  n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
                              // lambda_G(k) for all k via one pass over all subsets
                              std::vector<int> lambda_k(n + 1, 0);
                              for (std::uint64_t x = 0;; ++x) {
                                  int sz = std::popcount(x);
                                  lambda_k[sz] = std::max(
                                      lambda_k[sz], detail::distinct_rows_mask(adj, n, x));
                                  if (x == full) break;
                              }
                              for (int k = 1; k <= n; ++k)
                                  lambda_k[k] = std::max(lambda_k[k], lambda_k[k - 1]);
                              int worst_lhs = 0, worst_rhs = 1;
                              bool ok = true;
                              for (std::uint64_t x = 0;; ++x) {
                                  int dr = detail::distinct_rows_mask(adj, n, x);
                                  int cr = detail::cutrank_mask(adj, n, x);
                                  if (dr > lambda_k[cr]) ok = false;
                                  if (worst_rhs * dr > worst_lhs * lambda_k[cr]) {
                                      worst_lhs = dr;
                                      worst_rhs = lambda_k[cr];
                                  }
                                  if (x == full) break;
                              }
                              fill(row, exact::Rat(worst_lhs), exact::Rat(worst_rhs));
                              return ok;
                          }};

        reg["lemma32"] = {"compile round-trips and uses at most 2 beta + 1 labels",
                          "<=",
                          true,
                          true,
                          [](const Graph&, const BoundParams&) { return true; },
                          [](SpecContext& c, const BoundParams&, GraphRow& row) {
                              const auto& ce = c.compiled();
                              bool round = compiled_matches_input(*c.g, ce);
                              exact::Rat lhs(ce.expr.width()), rhs(2 * ce.c + 1);
                              fill(row, lhs, rhs);
                              if (!round) row.rhs += " (round-trip failed)";
                              return round && lhs <= rhs;
                          }};

        reg["lemma33"] = {"rwd <= compiled width <= 2 lambda_G(rwd) - 1",
                          "<=",
                          true,
                          true,
                          [](const Graph&, const BoundParams&) { return true; },
                          [](SpecContext& c, const BoundParams&, GraphRow& row) {
                              int w = c.compiled_width();
                              int lam = lambda_of_k(*c.g, c.rwd());
                              exact::Rat lhs(w), rhs(2 * lam - 1);
                              fill(row, lhs, rhs);
                              return c.rwd() <= w && lhs <= rhs;
                          }};

        reg["wood"] = {"clique count <= 2^d (n - d + 1) for d = degeneracy",
                       "<=",
                       true,
                       false,
                       [](const Graph&, const BoundParams&) { return true; },
                       [](SpecContext& c, const BoundParams&, GraphRow& row) {
                           int d = degeneracy(*c.g);
                           exact::Rat lhs(exact::Int(count_cliques(*c.g)));
                           exact::Rat rhs(bounds::wood_clique_bound(c.g->vertex_count(), d));
                           fill(row, lhs, rhs);
                           return lhs <= rhs;
                       }};

        reg["lemma61"] = {"no K_r topological minor: per-size clique counts within (beta r)^{k-1} bound",
                          "<=",
                          true,
                          false,
                          [](const Graph& g, const BoundParams& p) {
                              return !has_topological_minor(g, p.get_int("r"));
                          },
                          [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                              int r = p.get_int("r");
                              exact::Rat beta = p.get_rat("beta", exact::Rat(10));
                              bool ok = true;
                              exact::Rat worst_l(0), worst_r(1);
                              for (int k = 1; k <= r - 1; ++k) {
                                  exact::Rat cnt(exact::Int(count_cliques(*c.g, k)));
                                  exact::Rat bnd = bounds::clique_bound_topminor(
                                      c.g->vertex_count(), r, k, beta);
                                  if (cnt > bnd) ok = false;
                                  if (worst_r * cnt > worst_l * bnd) {
                                      worst_l = cnt;
                                      worst_r = bnd;
                                  }
                              }
                              fill(row, worst_l, worst_r);
                              return ok;
                          }};

        reg["prop63"] = {"no K_r topological minor: total cliques <= 2^{tau r log r} n",
                         "<=",
                         true,
                         false,
                         [](const Graph& g, const BoundParams& p) {
                             return !has_topological_minor(g, p.get_int("r"));
                         },
                         [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                             int r = p.get_int("r");
                             exact::Rat tau = p.get_rat("tau", exact::Rat(451, 100));
                             exact::Int cnt(count_cliques(*c.g));
                             bool ok = bounds::clique_total_topminor_ok(
                                 cnt, c.g->vertex_count(), r, tau);
                             fill_approx(row, exact::Rat(cnt), "2^{tau r log r} n",
                                         std::pow(2.0, rat_to_double(tau) * r * std::log2(r)) *
                                             c.g->vertex_count());
                             return ok;
                         }};

        reg["lemma41"] = {"no K_r minor: per-size clique counts within (2 alpha sqrt(log r))^{k-1} bound (report only)",
                          "<=",
                          false,
                          false,
                          [](const Graph& g, const BoundParams& p) {
                              return !has_minor(g, p.get_int("r"));
                          },
                          [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                              int r = p.get_int("r");
                              exact::Rat alpha = p.get_rat("alpha");
                              bool ok = true;
                              for (int k = 1; k <= r - 1; ++k) {
                                  exact::Int cnt(count_cliques(*c.g, k));
                                  if (!bounds::clique_minor_ok(cnt, c.g->vertex_count(), r, k,
                                                               alpha))
                                      ok = false;
                              }
                              fill_approx(row, exact::Rat(exact::Int(count_cliques(*c.g))),
                                          "per-size minor clique bounds",
                                          bounds::clique_bound_minor_approx(
                                              c.g->vertex_count(), r, std::max(2, r - 1),
                                              rat_to_double(alpha)));
                              return ok;
                          }};

        reg["prop43"] = {"no K_r minor: total cliques <= n 2^{mu r loglog r} (report only)",
                         "<=",
                         false,
                         false,
                         [](const Graph& g, const BoundParams& p) {
                             return !has_minor(g, p.get_int("r"));
                         },
                         [](SpecContext& c, const BoundParams& p, GraphRow& row) {
                             using boost::multiprecision::numerator;
                             using boost::multiprecision::denominator;
                             int r = p.get_int("r");
                             exact::Rat mu = p.get_rat("mu");
                             exact::Rat mexp = mu * r;
                             unsigned pp = static_cast<unsigned>(numerator(mexp));
                             unsigned qq = static_cast<unsigned>(denominator(mexp));
                             exact::Int cnt(count_cliques(*c.g));
                             exact::Rat s =
                                 exact::rpow(exact::Rat(cnt, c.g->vertex_count()), qq);
                             bool ok =
                                 exact::cmp_log2_pow(s, static_cast<unsigned>(r), pp) <= 0;
                             fill_approx(row, exact::Rat(cnt), "n 2^{mu r loglog r}",
                                         c.g->vertex_count() *
                                             std::pow(2.0, rat_to_double(mu) * r *
                                                               std::log2(std::log2(r))));
                             return ok;
                         }};

        return reg;
    }();
    return registry;
}

}  // namespace detail

inline std::vector<std::string> known_spec_ids() {
    std::vector<std::string> ids;
    for (auto& [id, def] : detail::spec_registry()) ids.push_back(id);
    return ids;
}

/// Runs one bound spec over a corpus: class membership is computed (never
/// assumed), non-members are skipped and counted, solver resource limits
/// surface as per-graph skips. Rows keep corpus order.
inline VerificationReport verify_corpus(const std::vector<NamedGraph>& corpus,
                                        const std::string& spec_id, const BoundParams& params) {
    auto it = detail::spec_registry().find(spec_id);
    if (it == detail::spec_registry().end())
        throw std::invalid_argument("unknown spec id '" + spec_id + "'");
    const detail::SpecDef& def = it->second;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.spec_id = spec_id;
    rep.params = params;
    rep.asserted = def.asserted;
    rep.comparator = def.comparator;
    rep.rows.resize(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        GraphRow& row = rep.rows[i];
        row.id = corpus[i].id;
        row.n = corpus[i].graph.vertex_count();
        row.m = corpus[i].graph.edge_count();
        try {
            if (def.needs_edge && corpus[i].graph.edge_count() == 0) {
                row.skipped = true;
                row.skip_reason = "bound assumes at least one edge";
                continue;
            }
            row.member = def.member(corpus[i].graph, params);
            if (!row.member) continue;
            detail::SpecContext ctx;
            ctx.g = &corpus[i].graph;
            row.satisfied = def.check(ctx, params, row);
        } catch (const resource_limit_error& e) {
            row.skipped = true;
            row.skip_reason = e.what();
        }
    }
    for (auto& row : rep.rows) {
        if (row.skipped) {
            ++rep.skipped;
            continue;
        }
        if (!row.member) continue;
        ++rep.checked;
        if (!row.satisfied) ++rep.violations;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool"] = std::string(kToolName) + " " + kVersion;
    j["spec_id"] = rep.spec_id;
    j["params"] = nlohmann::ordered_json::object();
    for (auto& [k, v] : rep.params.raw()) j["params"][k] = v;
    j["asserted"] = rep.asserted;
    j["comparator"] = rep.comparator;
    nlohmann::ordered_json summary;
    summary["count"] = rep.rows.size();
    summary["checked"] = rep.checked;
    summary["skipped"] = rep.skipped;
    summary["violations"] = rep.violations;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", rep.max_ratio);
    summary["max_ratio"] = buf;
    summary["runtime_ms"] = rep.runtime_ms;
    j["summary"] = std::move(summary);
    j["graphs"] = nlohmann::ordered_json::array();
    for (auto& row : rep.rows) {
        nlohmann::ordered_json r;
        r["id"] = row.id;
        r["n"] = row.n;
        r["m"] = row.m;
        r["member"] = row.member;
        if (row.skipped) {
            r["skipped"] = true;
            r["reason"] = row.skip_reason;
        } else if (row.member) {
            r["lhs"] = row.lhs;
            r["rhs"] = row.rhs;
            r["satisfied"] = row.satisfied;
            std::snprintf(buf, sizeof(buf), "%.6g", row.ratio);
            r["ratio"] = buf;
        }
        j["graphs"].push_back(std::move(r));
    }
    return j;
}

inline std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "id,n,m,member,skipped,lhs,rhs,satisfied,ratio\n";
    for (auto& row : rep.rows) {
        out << row.id << ',' << row.n << ',' << row.m << ',' << (row.member ? 1 : 0) << ','
            << (row.skipped ? 1 : 0) << ',';
        if (!row.skipped && row.member) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g", row.ratio);
            out << '"' << row.lhs << '"' << ',' << '"' << row.rhs << '"' << ','
                << (row.satisfied ? 1 : 0) << ',' << buf;
        } else {
            out << ",,,";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace widthkit

#endif
