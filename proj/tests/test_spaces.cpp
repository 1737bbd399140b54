#include "support/dense_oracle.hpp"

#include <p3x/spaces.hpp>

#include <gtest/gtest.h>

namespace {

using namespace p3x::spaces;
using p3x::exactla::Scalar;
using p3x::exactla::SparseMatrix;
using p3x::exactla::SparseVector;

QuarticForm Q(const std::string& text) { return QuarticForm::parse(text, "test"); }

TEST(Quartic, FermatAndParse) {
  const auto f = QuarticForm::fermat();
  EXPECT_EQ(f.terms().size(), 4U);
  EXPECT_EQ(Q("1 4 0 0 0\n1 0 4 0 0\n# comment\n1 0 0 4 0\n1 0 0 0 4\n"), f);
  EXPECT_EQ(f.id(), Q("1 0 0 0 4\n1 0 0 4 0\n1 0 4 0 0\n1 4 0 0 0\n").id());
  EXPECT_NE(f.id(), QuarticForm::random(1).id());
}

TEST(Quartic, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      QuarticForm::parse(text, "q");
    } catch (const QuarticParseError& e) {
      return e.line;
    }
    return -1;
  };
  EXPECT_EQ(line_of("1 4 0 0 0\n1 3 0 0 0\n"), 2);     // degree 3
  EXPECT_EQ(line_of("1 4 0 0 0\n2 4 0 0 0\n"), 2);     // duplicate monomial
  EXPECT_EQ(line_of("# c\n1 4 0 0\n"), 2);             // four fields
  EXPECT_EQ(line_of("1 4 0 0 0\nx 0 4 0 0\n"), 2);     // bad coefficient
  EXPECT_GE(line_of(""), 0);                           // no terms
  EXPECT_THROW(QuarticForm::load("/nonexistent/q.q"), QuarticError);
}

TEST(Quartic, RandomIsSeededAndNamed) {
  EXPECT_EQ(QuarticForm::random(7), QuarticForm::random(7));
  EXPECT_FALSE(QuarticForm::random(7) == QuarticForm::random(8));
  EXPECT_EQ(QuarticForm::random(3).name(), "random(seed=3)");
  const auto f = QuarticForm::random(3);
  for (const auto& t : f.terms()) {
    EXPECT_EQ(degree(t.exp), 4);
    EXPECT_NE(t.coeff, 0);
  }
}

TEST(Space, TensorFlattensAndDropsGround) {
  const auto a = Space::labeled(Space::Kind::Graded, "A", {"a0", "a1"});
  const auto b = Space::labeled(Space::Kind::Graded, "B", {"b0", "b1", "b2"});
  const auto ab = tensor(a, b);
  EXPECT_EQ(ab.dim(), 6U);
  EXPECT_EQ(tensor(ab, Space::ground()), ab);
  EXPECT_EQ(tensor(tensor(a, b), a), tensor(std::vector<Space>{a, b, a}));
  EXPECT_EQ(ab.label(4), "a1(x)b1");
  EXPECT_EQ(dual(tensor(a, b)), tensor(dual(a), dual(b)));
  EXPECT_EQ(dual(dual(a)), a);
  EXPECT_NE(a, b);
}

TEST(Space, WedgeIndexRoundTrip) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::size_t expect = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        EXPECT_EQ(Space::wedge_index(n, a, b), expect);
        EXPECT_EQ(Space::wedge_pair(n, expect), std::make_pair(a, b));
        ++expect;
      }
    }
    EXPECT_EQ(wedge2(Space::labeled(Space::Kind::Graded, "V", std::vector<std::string>(n, "v"))).dim(), expect);
  }
  EXPECT_THROW(Space::wedge_index(4, 2, 2), std::out_of_range);
}

TEST(Ring, P3PiecesAreFull) {
  const auto p3 = RingSpec::p3();
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(graded_piece(p3, d).dim(), polys_dim(d));
  EXPECT_EQ(graded_piece(p3, -1).dim(), 0U);
  EXPECT_EQ(graded_piece(p3, 1).basis(), (std::vector<std::string>{"x0", "x1", "x2", "x3"}));
}

TEST(Ring, SurfaceAndCurveHilbertFunctions) {
  const auto f = QuarticForm::fermat();
  const auto g = QuarticForm::random(1);
  const auto x = RingSpec::surface(g);
  const auto c = RingSpec::curve(f, g);
  for (int d = 0; d <= 12; ++d) {
    EXPECT_EQ(graded_piece(x, d).dim(), d == 0 ? 1U : static_cast<std::size_t>(2 * d * d + 2)) << d;
    EXPECT_EQ(graded_piece(c, d).dim(), RingSpec::koszul_dim(d)) << d;
  }
  for (int d = 5; d <= 12; ++d) EXPECT_EQ(graded_piece(c, d).dim(), static_cast<std::size_t>(16 * d - 32)) << d;
}

TEST(Ring, DegenerateCurves) {
  const auto f = QuarticForm::fermat();
  EXPECT_THROW(RingSpec::curve(f, f), InvalidRing);
  const auto a = Q("1 4 0 0 0\n");
  const auto b = Q("1 3 1 0 0\n");  // shares x0^3 with a
  const auto c = RingSpec::curve(a, b);
  EXPECT_EQ(graded_piece(c, 4).dim(), 33U);
  try {
    graded_piece(c, 5);
    FAIL() << "expected NotRegularPair";
  } catch (const NotRegularPair& e) {
    EXPECT_EQ(e.degree, 5);
  }
}

TEST(Ring, PieceProjectionKillsTheIdeal) {
  const auto g = QuarticForm::random(2);
  const auto x = RingSpec::surface(g);  // piece() references the ring's cache
  const auto& piece = x.piece(6);
  const auto gens = x.generators_in_degree(6);
  EXPECT_TRUE(piece.projection.multiply(gens.transpose()).is_zero());
  EXPECT_EQ(piece.ideal_rank, polys_dim(2));
}

TEST(Maps, DimensionAndTagChecks) {
  const auto v1 = graded_piece(RingSpec::p3(), 1);
  const auto v2 = graded_piece(RingSpec::p3(), 2);
  EXPECT_THROW(LinearMap(v1, v2, SparseMatrix(4, 4)), DomainMismatch);
  EXPECT_THROW(compose(identity(v1), identity(v2)), DomainMismatch);
  EXPECT_EQ(compose(identity(v1), identity(v1)), identity(v1));
}

TEST(Maps, SwapIsAnInvolutionAndCoevEvPair) {
  const auto v1 = graded_piece(RingSpec::p3(), 1);
  const auto v2 = graded_piece(RingSpec::p3(), 2);
  EXPECT_EQ(compose(swap_map(v2, v1), swap_map(v1, v2)).matrix(), SparseMatrix::identity(40));
  // ev o coev = dim V on the ground field.
  const auto tr = compose(ev(v1), swap_map(dual(v1), v1));
  EXPECT_EQ(compose(tr, coev(v1)).matrix().get(0, 0), 4);
}

TEST(Maps, CurryingRoundTrips) {
  const auto p3 = RingSpec::p3();
  const auto v1 = graded_piece(p3, 1);
  const auto m = mult_map(p3, 1, 1);  // V1 (x) V1 -> V2
  const auto cf = curry_first(m, v1, v1);
  EXPECT_EQ(cf.domain(), v1);
  EXPECT_EQ(cf.codomain(), tensor(dual(v1), graded_piece(p3, 2)));
  const auto cl = curry_last(m, v1, v1);
  EXPECT_EQ(cl.codomain(), tensor(graded_piece(p3, 2), dual(v1)));
  // m is symmetric, so both curryings carry the same data.
  EXPECT_EQ(cf.matrix().nnz(), cl.matrix().nnz());
  const auto back = uncurry_first(cf, dual(v1), graded_piece(p3, 2));
  EXPECT_EQ(back.domain(), tensor(v1, v1));
  EXPECT_EQ(back.matrix(), m.matrix());
}

TEST(Maps, RestrictionNeedsContainedIdeals) {
  const auto x = RingSpec::surface(QuarticForm::fermat());
  EXPECT_THROW(restriction_map(x, RingSpec::p3(), 2), IncompatibleRings);
  EXPECT_THROW(restriction_map(x, RingSpec::surface(QuarticForm::random(1)), 2), IncompatibleRings);
  EXPECT_EQ(restriction_map(RingSpec::p3(), x, 3).matrix(), SparseMatrix::identity(20));
}

TEST(Subquotient, KernelAndCokernel) {
  const auto p3 = RingSpec::p3();
  const auto m = mult_map(p3, 1, 1);
  const auto k = kernel_sq(m, "K");
  EXPECT_EQ(k.dim(), 6U);  // wedge^2 V1
  EXPECT_TRUE(m.matrix().multiply(k.inclusion().matrix()).is_zero());
  EXPECT_THROW(k.projection(), std::logic_error);
  const auto q = cokernel_sq(dual_map(m), "Q");
  EXPECT_EQ(q.dim(), 6U);
  EXPECT_TRUE(q.projection().matrix().multiply(dual_map(m).matrix()).is_zero());
  EXPECT_THROW(q.inclusion(), std::logic_error);
  EXPECT_EQ(whole(graded_piece(p3, 2)).dim(), 10U);
}

TEST(Subquotient, InduceChecksWellDefinedness) {
  const auto p3 = RingSpec::p3();
  const auto v1 = graded_piece(p3, 1);
  const auto line = Subquotient::kernel_of(LinearMap(v1, Space::ground(), SparseMatrix::from_dense({{1, -1, 0, 0}})));
  const auto plane = Subquotient::kernel_of(LinearMap(v1, Space::ground(), SparseMatrix::from_dense({{0, 0, 1, 0}})));
  EXPECT_EQ(line.dim(), 3U);
  EXPECT_NO_THROW(induce(identity(v1), whole(v1), whole(v1)));
  // x0 - x1 etc. are not all inside x2 = 0.
  EXPECT_THROW(induce(identity(v1), whole(v1), plane), NotWellDefined);
  const auto q = Subquotient::cokernel_of(LinearMap(Space::ground(), v1, SparseMatrix::from_dense({{1}, {0}, {0}, {0}})));
  EXPECT_THROW(induce(identity(v1), q, whole(v1)), NotWellDefined);
  const auto ind = induce(identity(v1), whole(v1), q);
  EXPECT_EQ(ind.matrix().rows(), 3U);
}

TEST(Subquotient, CoordinatesInverseToBasis) {
  const auto p3 = RingSpec::p3();
  const auto k = kernel_sq(mult_map(p3, 1, 1));
  for (std::size_t i = 0; i < k.dim(); ++i) {
    EXPECT_EQ(k.coordinates(k.basis()[i]), SparseVector::unit(k.dim(), i));
  }
}

}  // namespace
