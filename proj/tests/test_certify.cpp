#include <gtest/gtest.h>

#include "helpers.hpp"
#include "webx/certify.hpp"
#include "webx/extraction.hpp"

using namespace webx;
using namespace webx::test;

TEST(VerifyClique, Examples) {
  EXPECT_TRUE(certify::verify_clique(complete_graph(3), {{0, 1, 2}}, 3));
  EXPECT_FALSE(certify::verify_clique(path_graph(3), {{0, 1, 2}}, 3));
  EXPECT_FALSE(certify::verify_clique(complete_graph(3), {{0, 1}}, 3));
  EXPECT_FALSE(certify::verify_clique(complete_graph(3), {{0, 1, 1}}, 3));
  EXPECT_FALSE(certify::verify_clique(complete_graph(3), {{0, 1, 5}}, 3));
}

TEST(VerifyBiclique, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(certify::verify_biclique(c4, {{0, 2}, {1, 3}}, 2));
  const Graph k4 = complete_graph(4);
  EXPECT_FALSE(certify::verify_biclique(k4, {{0, 2}, {1, 3}}, 2));
  const Graph p4 = path_graph(4);  // 0-1-2-3: cross pair 0-3 missing
  EXPECT_FALSE(certify::verify_biclique(p4, {{0, 2}, {1, 3}}, 2));
  EXPECT_FALSE(certify::verify_biclique(c4, {{0, 2}, {0, 3}}, 2));
}

TEST(VerifyCleanSet, Examples) {
  const auto inst = plant_subdivision(6, 2, 0.0, 0);
  EXPECT_TRUE(certify::verify_clean_set(inst.graph, inst.web, {{0, 2, 4}}, 3));

  const auto k4 = complete_web(4);
  EXPECT_FALSE(certify::verify_clean_set(complete_graph(4), k4, {{0, 1}}, 2));

  // Vertex 0 sees the interior of {1,2}.
  const Vertex m12 = inst.web.path(1, 2)[1];
  const Graph bad = with_edges(inst.graph, {{0, m12}});
  EXPECT_FALSE(certify::verify_clean_set(bad, inst.web, {{0, 1, 2}}, 3));
  EXPECT_TRUE(certify::verify_clean_set(bad, inst.web, {{0, 3, 4}}, 3));

  // Interiors of {0,1} and {0,2} touching: pairs sharing an end count.
  const Vertex m01 = inst.web.path(0, 1)[1];
  const Vertex m02 = inst.web.path(0, 2)[1];
  const Graph touch = with_edges(inst.graph, {{m01, m02}});
  EXPECT_FALSE(certify::verify_clean_set(touch, inst.web, {{0, 1, 2}}, 3));
  EXPECT_TRUE(certify::verify_clean_set(touch, inst.web, {{0, 1, 2}, CleanLevel::pinned}, 3, CleanLevel::pinned));

  EXPECT_FALSE(certify::verify_clean_set(inst.graph, inst.web, {{0, 2, 4}}, 4));
  EXPECT_FALSE(certify::verify_clean_set(inst.graph, inst.web, {{0, 2, 7}}, 3));
  EXPECT_FALSE(certify::verify_clean_set(inst.graph, inst.web, {{0, 2, 4}, CleanLevel::pinned}, 3));
}

TEST(VerifyPinnedPair, Examples) {
  const Graph k7 = complete_graph(7);
  const Web w = complete_web(7);
  EXPECT_TRUE(certify::verify_pinned_pair(k7, w, {{0}, {{1, 2}}}, 1, 1));
  EXPECT_FALSE(certify::verify_pinned_pair(k7, w, {{1}, {{1, 2}}}, 1, 1));
  EXPECT_FALSE(certify::verify_pinned_pair(k7, w, {{0}, {{1, 2}, {2, 3}}}, 1, 2));
  const auto inst = plant_subdivision(5, 2, 0.0, 0);
  EXPECT_FALSE(certify::verify_pinned_pair(inst.graph, inst.web, {{0}, {{1, 2}}}, 1, 1));
  EXPECT_FALSE(certify::verify_pinned_pair(k7, w, {{0}, {{1, 2}}}, 2, 1));
}

TEST(VerifyTouchingFamilies, Examples) {
  const auto inst = plant_subdivision(5, 2, 0.0, 0);
  const Vertex m01 = inst.web.path(0, 1)[1];
  const Vertex m23 = inst.web.path(2, 3)[1];
  const Graph g = with_edges(inst.graph, {{m01, m23}});
  EXPECT_TRUE(certify::verify_touching_families(g, inst.web, {{{0, 1}}, {{2, 3}}}, 1));
  EXPECT_FALSE(certify::verify_touching_families(g, inst.web, {{{0, 1}}, {{2, 3}}}, 2));
  EXPECT_FALSE(certify::verify_touching_families(g, inst.web, {{{0, 1}}, {{2, 4}}}, 1));
  EXPECT_FALSE(certify::verify_touching_families(g, inst.web, {{{0, 1}}, {{0, 1}}}, 1));
}

TEST(VerifyCertificate, RejectsInvalidWebAndInconclusive) {
  const auto inst = plant_subdivision(5, 2, 0.0, 0);
  Certificate c;
  c.operation = "main_extract";
  c.params.s = 3;
  c.evidence = CleanSet{{0, 1, 2}, CleanLevel::full};
  EXPECT_TRUE(certify::verify_certificate(inst.graph, inst.web, c));
  EXPECT_FALSE(certify::verify_certificate(path_graph(20), inst.web, c));
  c.evidence = Inconclusive{"x", 0};
  EXPECT_FALSE(certify::verify_certificate(inst.graph, inst.web, c));
}

TEST(VerifyCertificate, CorruptedWebCannotLaunderACertificate) {
  // Certificate about interiors checked against the graph, not web metadata:
  // claiming an edge the graph lacks fails even though the web is valid.
  const auto inst = plant_subdivision(5, 2, 0.0, 0);
  Certificate c;
  c.operation = "lemma_clean_interior";
  c.params.c = 1;
  c.evidence = TouchingFamilies{{{0, 1}}, {{2, 3}}};
  EXPECT_FALSE(certify::verify_certificate(inst.graph, inst.web, c));
}

TEST(CertificateJson, RoundTripAllKinds) {
  Certificate c;
  c.operation = "theorem_combined";
  c.params.s = 3;
  c.params.budget = Budget::steps(77);
  c.route = Route::paper_bound;
  c.stages = {{"lemma_pinned", CertKind::clean_set, Route::paper_bound, {1, 2, 3}}};
  for (const Evidence& ev : std::vector<Evidence>{InducedClique{{1, 2}}, InducedBiclique{{1}, {2}},
                                                  CleanSet{{1, 2, 3}, CleanLevel::interior},
                                                  PinnedPair{{1}, {{2, 3}}},
                                                  TouchingFamilies{{{1, 2}}, {{3, 4}}}, Inconclusive{"why", 9}}) {
    c.evidence = ev;
    EXPECT_EQ(parse_certificate(format_certificate(c)), c);
  }
}

TEST(CertificateJson, RejectsMalformed) {
  EXPECT_THROW(parse_certificate("not json"), InputError);
  EXPECT_THROW(parse_certificate(R"({"kind":"nope"})"), InputError);
  Certificate c;
  c.evidence = InducedClique{{1, 2}};
  auto j = certificate_to_json(c);
  j["evidence"]["size"] = 3;
  EXPECT_THROW(parse_certificate(j.dump()), InputError);
}
