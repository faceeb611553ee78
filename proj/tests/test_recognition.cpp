#include <gtest/gtest.h>

#include "domeq/constructions.hpp"
#include "domeq/domination.hpp"
#include "domeq/generators.hpp"
#include "domeq/recognition.hpp"

using namespace domeq;

namespace {

bool has_failure(const HValidationReport& r, HFailureKind kind) {
  return std::any_of(r.failures.begin(), r.failures.end(), [&](const HFailure& f) { return f.kind == kind; });
}

std::vector<PartitionedInstance> mixed_h_instances(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<PartitionedInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const bool local = out.size() % 2 == 1;
    auto inst = random_h_instance(rng.between(2, 7), 0.3 + 0.4 * rng.uniform(), local ? 0.0 : 0.25 * rng.uniform(),
                                  rng.next());
    if (!inst || inst->g.order() > kOracleVertexLimit) continue;
    out.push_back(local ? add_local_supplementary_edges(*inst, 0.4 * rng.uniform(), rng) : *inst);
  }
  return out;
}

}  // namespace

TEST(ValidateH, Examples) {
  auto p3 = validate_h(double_subdivision(path_graph(3)));
  EXPECT_TRUE(p3.valid);
  EXPECT_EQ(p3.underlying, path_graph(3));
  auto c3 = validate_h(double_subdivision(complete_graph(3)));
  EXPECT_FALSE(c3.valid);
  EXPECT_TRUE(has_failure(c3, HFailureKind::kUnderlyingC3));
  auto c4 = validate_h(double_subdivision(cycle_graph(4)));
  EXPECT_TRUE(has_failure(c4, HFailureKind::kUnderlyingC4));
  auto b = validate_h(gadget_b());
  EXPECT_TRUE(b.valid);
  EXPECT_EQ(b.underlying, Graph::from_edges(4, {{0, 1}, {2, 3}}));
}

TEST(ValidateH, RuleViolations) {
  auto base = double_subdivision(path_graph(3));
  auto inst = base;
  inst.g = with_edge(inst.g, {inst.pairs[0].x[0], inst.pairs[0].x[1]});
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kPairAdjacent));

  inst = base;
  inst.g = with_edge(inst.g, {0, 2});
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kDNotIndependent));

  inst = base;
  inst.g = with_edge(inst.g, {2, inst.pairs[0].x[0]});
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kPairNeighborhood));

  inst = base;
  inst.pairs.pop_back();
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kUnassignedVertex));

  inst = base;
  inst.pairs[1] = inst.pairs[0];
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kDuplicatePair));

  inst = base;
  inst.pairs[0].x[0] = 0;
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kPairVertexInD));

  inst = base;
  inst.d = VertexSet(3);
  EXPECT_TRUE(has_failure(validate_h(inst), HFailureKind::kBadUniverse));

  ConstructionSpec spec{path_graph(3), {{0, 1}}, {}};
  EXPECT_FALSE(validate_h(build(spec)).valid);
}

TEST(ValidateH, FailureNames) {
  EXPECT_STREQ(to_string(HFailureKind::kPairAdjacent), "pair-independent");
  EXPECT_STREQ(to_string(HFailureKind::kUnderlyingC4), "underlying-c4");
}

TEST(Underlying, Examples) {
  EXPECT_EQ(extract_underlying(cycle_graph(4), VertexSet(4, {0, 2})), complete_graph(2));
  auto a3 = gadget_a(3);
  EXPECT_EQ(extract_underlying(a3.g, a3.d), star_graph(3));
  auto p3 = double_subdivision(path_graph(3));
  EXPECT_EQ(extract_underlying(p3.g, p3.d), path_graph(3));
}

TEST(Underlying, RoundTripOnRandomSpecs) {
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    auto spec = random_g1_spec(7, rng.uniform(), 3, 0.3 * rng.uniform(), rng);
    auto inst = build(spec);
    ASSERT_EQ(extract_underlying(inst.g, inst.d), spec.f);
  }
}

TEST(RecognizeH, Examples) {
  auto p3 = recognize_h(double_subdivision(path_graph(3)));
  EXPECT_TRUE(p3.equal);
  EXPECT_FALSE(p3.certificate);
  EXPECT_TRUE(recognize_h(double_subdivision(complete_graph(2))).equal);

  auto b = gadget_b();
  auto vb = recognize_h(b);
  EXPECT_FALSE(vb.equal);
  ASSERT_TRUE(vb.certificate);
  EXPECT_TRUE(std::holds_alternative<BCertificate>(*vb.certificate));
  EXPECT_TRUE(verify_certificate(b, *vb.certificate));

  for (int k = 2; k <= 4; ++k) {
    auto a = gadget_a(k);
    auto va = recognize_h(a);
    EXPECT_FALSE(va.equal);
    ASSERT_TRUE(va.certificate);
    const auto* cert = std::get_if<ACertificate>(&*va.certificate);
    ASSERT_NE(cert, nullptr);
    EXPECT_EQ(cert->leaves.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(cert->center, 0);
    EXPECT_TRUE(verify_certificate(a, *va.certificate));
  }
}

TEST(RecognizeH, InvalidInstanceThrows) {
  try {
    recognize_h(double_subdivision(complete_graph(3)));
    FAIL() << "accepted an instance outside H";
  } catch (const InvalidInstanceError& e) {
    EXPECT_FALSE(e.report().valid);
    EXPECT_TRUE(has_failure(e.report(), HFailureKind::kUnderlyingC3));
  }
}

TEST(RecognizeH, TamperedCertificatesRejected) {
  auto b = gadget_b();
  auto cert = std::get<BCertificate>(*recognize_h(b).certificate);
  auto bad = cert;
  std::swap(bad.x11, bad.x12);  // x_1^2 has no edge to x_2^1
  EXPECT_FALSE(verify_certificate(b, bad));
  bad = cert;
  bad.v1 = bad.x11;
  EXPECT_FALSE(verify_certificate(b, bad));

  auto a = gadget_a(3);
  auto ac = std::get<ACertificate>(*recognize_h(a).certificate);
  auto bad_a = ac;
  std::swap(bad_a.first[0], bad_a.second[0]);
  EXPECT_FALSE(verify_certificate(a, bad_a));
  bad_a = ac;
  bad_a.leaves.pop_back();
  EXPECT_FALSE(verify_certificate(a, bad_a));
  // the same certificate does not hold in the plain double subdivision
  EXPECT_FALSE(verify_certificate(double_subdivision(star_graph(3)), ac));
}

TEST(RecognizeH, AgreesWithOracle) {
  int negatives = 0, a_certs = 0, b_certs = 0;
  for (const auto& inst : mixed_h_instances(52, 250)) {
    auto v = recognize_h(inst);
    ASSERT_EQ(v.equal, is_gamma_gamma2_graph(inst.g));
    if (!v.equal) {
      ++negatives;
      ASSERT_TRUE(v.certificate);
      ASSERT_TRUE(verify_certificate(inst, *v.certificate));
      (std::holds_alternative<BCertificate>(*v.certificate) ? b_certs : a_certs)++;
    }
  }
  EXPECT_GT(negatives, 0);
  EXPECT_GT(a_certs, 0);
  EXPECT_GT(b_certs, 0);
}

TEST(RecognizeH, WorkIsPolynomiallyBounded) {
  for (const auto& inst : mixed_h_instances(53, 200)) {
    auto v = recognize_h(inst);
    const auto f = validate_h(inst).underlying;
    const int delta_f = f.order() ? max_degree(f) : 0;
    EXPECT_LE(v.stats.supplementary_edges_checked, inst.g.size());
    EXPECT_LE(v.stats.matching_calls, 2LL * f.size());
    EXPECT_LE(v.stats.max_aux_order, 2 * delta_f);
    EXPECT_LE(v.stats.aux_vertices, 2LL * delta_f * v.stats.matching_calls);
  }
  // larger instances, beyond any exhaustive oracle
  Rng rng(54);
  for (int i = 0; i < 10; ++i) {
    auto inst = random_h_instance(40, 0.06, 0.0, rng.next());
    ASSERT_TRUE(inst);
    auto local = add_local_supplementary_edges(*inst, 0.05, rng);
    auto v = recognize_h(local);
    if (!v.equal) {
      EXPECT_TRUE(verify_certificate(local, *v.certificate));
    }
    EXPECT_LE(v.stats.matching_calls, 2LL * validate_h(local).underlying.size());
  }
}

TEST(RecognizeH, SupplementaryEdgeSharingDVertexIsNotB) {
  // one edge between two pairs around the same D-vertex: no B copy, and a
  // single cross edge cannot close a pair cycle
  auto inst = double_subdivision(path_graph(3));
  inst.g = with_edge(inst.g, {inst.pairs[0].x[0], inst.pairs[1].x[0]});
  auto v = recognize_h(inst);
  EXPECT_TRUE(v.equal);
  EXPECT_TRUE(is_gamma_gamma2_graph(inst.g));
}

TEST(RecognizePerfect, Examples) {
  EXPECT_TRUE(recognize_perfect(cycle_graph(4)).perfect);
  EXPECT_TRUE(recognize_perfect(gadget_s({3, 2}).g).perfect);
  EXPECT_TRUE(recognize_perfect(gadget_s({3}).g).perfect);
  EXPECT_TRUE(recognize_perfect(gadget_s({2, 2, 2}).g).perfect);
  auto c6 = recognize_perfect(cycle_graph(6));
  EXPECT_FALSE(c6.perfect);
  ASSERT_TRUE(c6.witness);
  EXPECT_EQ(c6.witness->kind, ForbiddenKind::kCycle);
  EXPECT_FALSE(recognize_perfect(complete_graph(4)).perfect);
}

TEST(RecognizePerfect, Componentwise) {
  EXPECT_TRUE(recognize_perfect(disjoint_union(cycle_graph(4), gadget_s({2, 3}).g)).perfect);
  auto v = recognize_perfect(disjoint_union(cycle_graph(4), cycle_graph(5)));
  EXPECT_FALSE(v.perfect);
  EXPECT_EQ(v.failing_component, (std::vector<Vertex>{4, 5, 6, 7, 8}));
  EXPECT_TRUE(recognize_perfect(empty_graph(0)).perfect);
}

TEST(RecognizePerfect, LowDegreeRejected) {
  try {
    recognize_perfect(path_graph(3));
    FAIL() << "accepted a vertex of degree 1";
  } catch (const LowDegreeError& e) {
    EXPECT_EQ(e.vertex(), 0);
  }
  EXPECT_THROW(perfect_oracle(path_graph(3)), LowDegreeError);
}

TEST(Forbidden, Examples) {
  EXPECT_TRUE(forbidden_subgraph_check(gadget_s({2, 2, 2}).g));
  EXPECT_FALSE(forbidden_subgraph_check(cycle_graph(5)));
  EXPECT_FALSE(forbidden_subgraph_check(cycle_graph(8)));
  EXPECT_EQ(find_forbidden_subgraph(disjoint_union(cycle_graph(4), cycle_graph(4)))->kind, ForbiddenKind::kDisconnected);
  EXPECT_EQ(find_forbidden_subgraph(path_graph(3))->kind, ForbiddenKind::kLowDegree);
  EXPECT_EQ(find_forbidden_subgraph(empty_graph(0))->kind, ForbiddenKind::kEmpty);
  EXPECT_THROW(forbidden_subgraph_check(cycle_graph(15)), SizeGuardError);
}

TEST(Forbidden, WitnessKinds) {
  // T6 with leaf pairs closed into 4-cycles: only 4-cycles, but T6 is present
  auto t6c = t6_augmented_graphs()[0];
  auto w = find_forbidden_subgraph(t6c);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ForbiddenKind::kT6);
  ASSERT_EQ(w->vertices.size(), 6u);
  EXPECT_TRUE(t6c.adjacent(w->vertices[0], w->vertices[1]));

  // S(2,2,2,...) with one ray subdivided further has a P8 and no other obstruction
  Graph chain = Graph::from_edges(10, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6},
                                       {6, 7}, {6, 8}, {7, 9}, {8, 9}});
  auto pw = find_forbidden_subgraph(chain);
  ASSERT_TRUE(pw);
  EXPECT_EQ(pw->kind, ForbiddenKind::kP8);
  EXPECT_EQ(pw->vertices.size(), 8u);
  for (std::size_t i = 0; i + 1 < pw->vertices.size(); ++i) EXPECT_TRUE(chain.adjacent(pw->vertices[i], pw->vertices[i + 1]));
}

TEST(PerfectOracle, Examples) {
  EXPECT_TRUE(perfect_oracle(cycle_graph(4)));
  EXPECT_FALSE(perfect_oracle(cycle_graph(6)));
  EXPECT_TRUE(perfect_oracle(gadget_s({2, 2}).g));
  EXPECT_THROW(perfect_oracle(cycle_graph(14)), SizeGuardError);
}

TEST(PerfectOracle, CounterexampleIsGenuine) {
  auto ce = perfect_oracle_counterexample(gadget_b().g);
  ASSERT_TRUE(ce);
  auto sub = induced_subgraph(gadget_b().g, VertexSet::from_range(8, *ce)).graph;
  EXPECT_GE(min_degree(sub), 2);
  EXPECT_FALSE(is_gamma_gamma2_graph(sub));
}

TEST(Perfect, TripleAgreementOnFamilies) {
  auto agree = [](const Graph& g) {
    const bool s = recognize_perfect(g).perfect;
    return s == forbidden_subgraph_check(g) && s == perfect_oracle(g);
  };
  for (const auto& m : s_multiplicity_lists(12)) EXPECT_TRUE(agree(gadget_s(m).g));
  for (int n = 4; n <= 9; ++n) EXPECT_TRUE(agree(cycle_graph(n))) << n;
  EXPECT_TRUE(agree(complete_graph(4)));
  for (const auto& g : t6_augmented_graphs()) {
    EXPECT_TRUE(agree(g));
    EXPECT_FALSE(recognize_perfect(g).perfect);
  }
  Rng rng(55);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_connected_min_degree2(rng.between(3, 10), 0.3 * rng.uniform(), rng);
    ASSERT_TRUE(agree(g));
  }
}

TEST(Perfect, SMultiplicityLists) {
  auto lists = s_multiplicity_lists(12);
  for (const auto& m : lists) {
    int order = 1;
    for (int x : m) order += 1 + x;
    EXPECT_LE(order, 12);
    EXPECT_TRUE(std::is_sorted(m.rbegin(), m.rend()));
  }
  EXPECT_NE(std::find(lists.begin(), lists.end(), std::vector<int>{2, 2, 2}), lists.end());
  EXPECT_NE(std::find(lists.begin(), lists.end(), std::vector<int>{10}), lists.end());
}
