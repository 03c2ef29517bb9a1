// Acceptance suite: runs every shipped criterion end to end and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails or blows its
// time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/independence.hpp"

using namespace ramsey;

namespace {

int failures = 0;
unsigned rng_seed = 20250809;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_seconds;
    if (!in_budget)
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    bool pass = ok && in_budget;
    if (!pass)
        ++failures;
    std::printf("%s  criterion %d: %s (%.3f s / budget %.0f s)%s%s\n", pass ? "PASS" : "FAIL",
                number, label.c_str(), secs, budget_seconds, detail.empty() ? "" : " — ",
                detail.c_str());
    std::fflush(stdout);
}

bool expect(bool cond, const std::string& what, std::string& detail)
{
    if (!cond && detail.empty())
        detail = what;
    return cond;
}

} // namespace

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0)
            rng_seed = static_cast<unsigned>(std::strtoul(arg.c_str() + 7, nullptr, 10));
    }

    criterion(1, "h8 certifies as the (3,4;8)-graph of the corollary machinery", 1.0,
              [](std::string& detail) {
                  Graph g = h8();
                  bool ok = expect(g.order() == 8 && g.edge_count() == 10, "8 vertices, 10 edges",
                                   detail);
                  ok = expect(is_triangle_free(g), "triangle-free", detail) && ok;
                  ok = expect(independence_number(g) == 3, "alpha = 3", detail) && ok;
                  ok = expect(common_neighbors(g, 2, 6).empty(), "v3,v7 share no neighbors",
                              detail) && ok;
                  CertifyResult res = certify(g, {ClaimKind::ks, 4, 8});
                  return expect(std::holds_alternative<Certificate>(res) &&
                                    std::get<Certificate>(res).valid(),
                                "certificate valid", detail) && ok;
              });

    criterion(2, "exhaustion proves R(3,3) = 6 and R(3,4) = 9 exactly", 300.0,
              [](std::string& detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  bool no6 = exhaustive_nonexistence(6, 3);
                  double t6 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count();
                  bool ok = expect(no6, "no (3,K3;6)-graph", detail);
                  ok = expect(t6 < 1.0, "n=6 under one second", detail) && ok;
                  ok = expect(std::holds_alternative<Certificate>(
                                  certify(c5(), {ClaimKind::ks, 3, 5})),
                              "C5 gives the matching lower bound", detail) && ok;
                  bool no9 = exhaustive_nonexistence(9, 4);
                  ok = expect(no9, "no (3,K4;9)-graph", detail) && ok;
                  ok = expect(std::holds_alternative<Certificate>(
                                  certify(h8(), {ClaimKind::ks, 4, 8})),
                              "h8 gives the matching lower bound", detail) && ok;
                  BoundsTable t = BoundsTable::table1();
                  return expect(t.row(3).r3ks == Bound{6, 6} && t.row(4).r3ks == Bound{9, 9},
                                "matches the shipped table", detail) && ok;
              });

    criterion(3, "construct5(h8,h8,(v3,v7),(v3,v7)) certifies R(3,5) >= 13", 1.0,
              [](std::string& detail) {
                  auto [f, trace] = construct5(h8(), h8(), 2, 6, 2, 6, 3, 3);
                  bool ok = expect(f.order() == 12, "12 vertices", detail);
                  ok = expect(trace.c_g == 0 && trace.c_h == 0, "c_G = c_H = 0", detail) && ok;
                  ok = expect(is_triangle_free(f), "triangle-free", detail) && ok;
                  int alpha = independence_number(f);
                  ok = expect(alpha <= 4, "alpha <= 4", detail) && ok;
                  Certificate cert = certify_or_throw(f, {ClaimKind::ks, 5, 12});
                  return expect(cert.claim.n + 1 == 13, "lower bound 13", detail) && ok;
              });

    criterion(4, "corollary 7 on the Petersen graph: 15 >= 11 + 4", 5.0,
              [](std::string& detail) {
                  Graph pet = petersen();
                  // independent certification: all 252 five-subsets induce >= 2 edges
                  bool ok = expect(!oracle::sparse_subset_brute(pet, 5),
                                   "brute 5-subset scan", detail);
                  ok = expect(std::holds_alternative<Certificate>(
                                  certify(pet, {ClaimKind::jse, 5, 10})),
                              "(3,K5-e;10) certificate", detail) && ok;
                  PipelineResult res = corollary7_pipeline(pet, 5);
                  ok = expect(res.graph.order() == 14, "14 vertices", detail) && ok;
                  ok = expect(res.certificate.alpha <= 5, "alpha <= 5", detail) && ok;
                  ok = expect(res.certificate.valid() && res.certificate.claim.s == 6,
                              "(3,6;14)-witness", detail) && ok;
                  // R(3,6) >= 15 instantiates R(3,s+1) >= R(3,K_s-e) + 4 = 11 + 4
                  return expect(res.certificate.claim.n + 1 == 15, "bound 15", detail) && ok;
              });

    criterion(5, "property suites: 3 x 200 construction instances, 100 solver oracles", 120.0,
              [](std::string& detail) {
                  std::mt19937 rng(rng_seed);
                  std::uniform_int_distribution<int> size(1, 16);
                  for (int i = 0; i < 200; ++i) {
                      Graph g = oracle::random_triangle_free(rng, size(rng), 0.5);
                      int u = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
                      int alpha_in = independence_number(g);
                      auto [out, trace] = construct1(g, u);
                      if (!expect(out.order() == g.order() + 3 && is_triangle_free(out) &&
                                      independence_number(out) <= alpha_in + 1,
                                  "construct1 postconditions", detail))
                          return false;
                  }
                  for (int i = 0; i < 200; ++i) {
                      Graph g = oracle::random_triangle_free(rng, size(rng), 0.5);
                      Graph h = oracle::random_triangle_free(rng, size(rng), 0.5);
                      int s = std::max(3, independence_number(g));
                      int t = std::max(3, independence_number(h));
                      int u = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
                      int v = std::uniform_int_distribution<int>(0, h.order() - 1)(rng);
                      auto [out, trace] = construct4(g, h, u, v, s, t);
                      if (!expect(out.order() == g.order() + h.order() - 2 &&
                                      is_triangle_free(out) &&
                                      independence_number(out) <= s + t - 1,
                                  "construct4 postconditions", detail))
                          return false;
                  }
                  int done = 0;
                  while (done < 200) {
                      Graph g = oracle::random_triangle_free(rng, 3 + rng() % 14, 0.45);
                      Graph h = oracle::random_triangle_free(rng, 3 + rng() % 14, 0.45);
                      auto ug = find_zero_common_pair(g);
                      auto vh = find_zero_common_pair(h);
                      if (!ug || !vh)
                          continue;
                      ++done;
                      int s = std::max(3, independence_number(g));
                      int t = std::max(3, independence_number(h));
                      auto [out, trace] =
                          construct5(g, h, ug->first, ug->second, vh->first, vh->second, s, t);
                      if (!expect(out.order() ==
                                          g.order() + h.order() - trace.c_g - trace.c_h - 4 &&
                                      is_triangle_free(out) &&
                                      independence_number(out) <= s + t - 2,
                                  "construct5 postconditions", detail))
                          return false;
                  }
                  std::uniform_int_distribution<int> osize(0, 20);
                  for (int i = 0; i < 100; ++i) {
                      Graph g = oracle::random_graph(rng, osize(rng), 0.35);
                      if (!expect(independence_number(g) == oracle::alpha_brute(g),
                                  "solver matches the 2^n oracle", detail))
                          return false;
                  }
                  return true;
              });

    criterion(6, "table regression: chains, telescoping, gap facts", 10.0,
              [](std::string& detail) {
                  BoundsTable t = BoundsTable::table1();
                  bool ok = expect(t.check_chain().empty(), "chain violations", detail);
                  ok = expect(telescoping_check(t, 4, 5), "36 - 6 = 3+5+4+5+5+8", detail) && ok;
                  for (int s = 4; s <= 9; ++s)
                      for (int k = 0; s + k <= 9; ++k)
                          ok = expect(telescoping_check(t, s, k), "telescoping range", detail) &&
                               ok;
                  return expect(gst_facts_check(t).empty(), "gap facts", detail) && ok;
              });

    criterion(7, "Shearer bound dominates every certificate-raised lower bound", 60.0,
              [](std::string& detail) {
                  BoundsTable t;
                  auto reg = [&t](const Certificate& c) { t.register_certificate(c); };
                  reg(certify_or_throw(c5(), {ClaimKind::ks, 3, 5}, "catalog:c5"));
                  reg(certify_or_throw(h8(), {ClaimKind::ks, 4, 8}, "catalog:h8"));
                  reg(certify_or_throw(circulant({13, {1, 5}}), {ClaimKind::ks, 5, 13}));
                  reg(certify_or_throw(petersen(), {ClaimKind::jse, 5, 10}));
                  reg(corollary7_pipeline(petersen(), 5).certificate);
                  reg(corollary8_pipeline(petersen(), 4, petersen(), 4).certificate);
                  // ladder the h8 witness upward with construct1
                  Graph g = h8();
                  for (int s = 5; s <= 10; ++s) {
                      g = construct1(g, 0).graph;
                      reg(certify_or_throw(g, {ClaimKind::ks, s, g.order()}, "construct1 ladder"));
                  }
                  bool ok = true;
                  for (int s = 3; s <= 9; ++s) {
                      if (!t.has_row(s + 1))
                          continue;
                      int lower = t.row(s + 1).r3ks.lo;
                      if (!expect(shearer_upper(s) >= lower,
                                  "shearer_upper(" + std::to_string(s) + ") = " +
                                      std::to_string(shearer_upper(s)) + " >= " +
                                      std::to_string(lower),
                                  detail))
                          ok = false;
                  }
                  return ok;
              });

    std::printf("note  criterion 8: open ranges for s >= 10 are carried as regression data "
                "only, covered by the table checks above\n");

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
