#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh/matrix.hpp"

using namespace hh;

namespace {

Matrix from_rows(std::size_t r, std::size_t c, std::vector<long> vals) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(vals[i * c + j]);
  return m;
}

} // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(rational_to_string(rational_from_string("5")) == "5");
  CHECK(rational_to_string(rational_from_string("0/7")) == "0");
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string(""));
  CHECK_THROWS(rational_from_string("a/b"));
  CHECK_THROWS(rational_from_string("1/2/3"));
}

TEST_CASE("rref examples") {
  auto r1 = rref(from_rows(2, 2, {1, 2, 2, 4}));
  CHECK(r1.mat == from_rows(2, 2, {1, 2, 0, 0}));
  CHECK(r1.pivots == std::vector<std::size_t>{0});

  auto r2 = rref(Matrix::identity(3));
  CHECK(r2.mat == Matrix::identity(3));
  CHECK(r2.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r3 = rref(from_rows(2, 2, {0, 1, 1, 0}));
  CHECK(r3.mat == Matrix::identity(2));

  // idempotent and canonical
  Matrix m = from_rows(3, 4, {2, 4, 1, 3, 1, 2, 0, 1, 0, 0, 3, 3});
  CHECK(rref(rref(m).mat).mat == rref(m).mat);
}

TEST_CASE("kernel examples and rank-nullity") {
  CHECK(kernel(Matrix(2, 2)).dim() == 2);
  CHECK(kernel(Matrix::identity(4)).dim() == 0);
  Subspace k = kernel(from_rows(1, 2, {1, 1}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Matrix::column({Rational(1), Rational(-1)})));

  for (auto vals : {std::vector<long>{1, 2, 3, 4, 5, 6}, std::vector<long>{0, 0, 0, 1, 1, 1},
                    std::vector<long>{2, 4, 6, 1, 2, 3}}) {
    Matrix m = from_rows(2, 3, vals);
    CHECK(kernel(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("solve") {
  Matrix v = Matrix::column({Rational(3), Rational(-1, 2)});
  auto s = solve(Matrix::identity(2), v);
  REQUIRE(s.has_value());
  CHECK(*s == v);

  // inconsistent: x + y = 1 and x + y = 2
  auto bad = solve(from_rows(2, 2, {1, 1, 1, 1}),
                   Matrix::column({Rational(1), Rational(2)}));
  CHECK(!bad.has_value());

  Matrix m = from_rows(2, 3, {1, 2, 0, 0, 0, 1});
  Matrix rhs = Matrix::column({Rational(5), Rational(7)});
  auto sol = solve(m, rhs);
  REQUIRE(sol.has_value());
  CHECK(m * *sol == rhs);
}

TEST_CASE("inverse") {
  Matrix m = from_rows(2, 2, {1, 1, 0, 1});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(2));
  CHECK(!inverse(from_rows(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("kronecker product") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  // kron(a,b)·(x⊗y) = (a·x)⊗(b·y) on all basis pairs
  Matrix a = from_rows(2, 2, {1, 2, 3, 4});
  Matrix b = from_rows(3, 3, {0, 1, 0, 2, 0, 1, 1, 1, 1});
  Matrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix x = Matrix::unit_column(2, i), y = Matrix::unit_column(3, j);
      CHECK(k * kron(x, y) == kron(a * x, b * y));
    }
}

TEST_CASE("tensor permutation and flip") {
  Matrix fl = flip(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(fl * kron(Matrix::unit_column(2, i), Matrix::unit_column(3, j)) ==
            kron(Matrix::unit_column(3, j), Matrix::unit_column(2, i)));
  // three factors, rotate left
  Matrix p = tensor_permutation({2, 3, 2}, {1, 2, 0});
  Matrix x = Matrix::unit_column(2, 1), y = Matrix::unit_column(3, 2),
         z = Matrix::unit_column(2, 0);
  CHECK(p * kron(kron(x, y), z) == kron(kron(y, z), x));
}

TEST_CASE("subspace operations") {
  Subspace a = Subspace::from_rows(3, from_rows(2, 3, {1, 0, 1, 0, 1, 0}));
  Subspace b = Subspace::from_rows(3, from_rows(2, 3, {1, 1, 1, 0, 0, 1}));
  Subspace cap = intersect(a, b);
  Subspace sp = sum(a, b);
  CHECK(sp.dim() == 3);
  CHECK(cap.dim() == 1); // dim a + dim b − dim sum
  CHECK(a.contains(cap));
  CHECK(b.contains(cap));
  CHECK(sum(a, a) == a);
  CHECK(intersect(a, a) == a);
}

TEST_CASE("quotient by a subspace") {
  Quotient q = Quotient::by(Subspace::from_rows(2, from_rows(1, 2, {1, 0})));
  CHECK(q.dim() == 1);
  // projection is (x, y) ↦ y
  CHECK(q.projection() == from_rows(1, 2, {0, 1}));
  CHECK(q.projection() * q.section() == Matrix::identity(1));

  // section∘projection − id has image inside the relations
  Subspace rel = Subspace::from_rows(4, from_rows(2, 4, {1, 2, 0, 0, 0, 0, 1, 1}));
  Quotient q2 = Quotient::by(rel);
  CHECK(q2.dim() == 2);
  CHECK(q2.projection() * q2.section() == Matrix::identity(2));
  Matrix defect = q2.section() * q2.projection() - Matrix::identity(4);
  for (std::size_t j = 0; j < 4; ++j) CHECK(rel.contains(defect.col(j) * Rational(-1)));
  // kernel of the projection is exactly the relation space
  CHECK(kernel(q2.projection()) == rel);
}

TEST_CASE("image") {
  Matrix m = from_rows(3, 2, {1, 2, 0, 0, 1, 2});
  Subspace im = image(m);
  CHECK(im.dim() == 1);
  CHECK(im.contains(m.col(0)));
}

namespace {

// deterministic small-entry matrix stream for the property checks
struct Lcg {
  std::uint64_t state = 0x2545F4914F6CDD1DULL;
  long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 7) - 3; // entries in [-3, 3]
  }
  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(next());
    return m;
  }
};

} // namespace

TEST_CASE("kernel, solve and quotient properties on generated matrices") {
  Lcg gen;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    Matrix m = gen.matrix(r, c);
    // rank-nullity and kernel membership
    Subspace k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (std::size_t i = 0; i < k.dim(); ++i)
      CHECK((m * k.basis_columns().col(i)).is_zero());
    // rref is idempotent
    CHECK(rref(rref(m).mat).mat == rref(m).mat);
    // a consistent system solves exactly
    Matrix x0 = gen.matrix(c, 1);
    auto sol = solve(m, m * x0);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == m * x0);
    // quotient identities for the row space
    Quotient q = Quotient::by(Subspace::from_rows(c, m));
    CHECK(q.projection() * q.section() == Matrix::identity(q.dim()));
    CHECK(kernel(q.projection()) == q.relations());
    // sum/intersection dimension formula
    Matrix m2 = gen.matrix(r, c);
    Subspace a = Subspace::from_rows(c, m), b = Subspace::from_rows(c, m2);
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("kron is associative and mixed-product on generated matrices") {
  Lcg gen;
  Matrix a = gen.matrix(2, 3), b = gen.matrix(3, 2), c = gen.matrix(2, 2);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  Matrix x = gen.matrix(3, 2), y = gen.matrix(2, 3);
  // (a⊗c)(x⊗y) = ax ⊗ cy
  CHECK(kron(a, c) * kron(x, y) == kron(a * x, c * y));
}
