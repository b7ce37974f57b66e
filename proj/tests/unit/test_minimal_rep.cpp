#include <leibniz/algebra.hpp>
#include <leibniz/errors.hpp>
#include <leibniz/minimal_rep.hpp>
#include <leibniz/rng.hpp>

#include "doctest.h"

using namespace leibniz;

namespace {

ParamFamilyM1 tuple9(long a1, long a2, long a3, long b1, long b2, long d1,
                     long d2, long e1, long t1) {
  ParamFamilyM1 p;
  p.alpha1 = a1;
  p.alpha2 = a2;
  p.alpha3 = a3;
  p.beta1 = b1;
  p.beta2 = b2;
  p.delta1 = d1;
  p.delta2 = d2;
  p.eta1 = e1;
  p.theta1 = t1;
  return p;
}

ParamFamilyM1 random_tuple(Rng& rng) {
  ParamFamilyM1 p;
  Rational* slots[] = {&p.alpha1, &p.alpha2, &p.alpha3, &p.beta1, &p.beta2,
                       &p.delta1, &p.delta2, &p.eta1,   &p.theta1};
  for (Rational* s : slots)
    if (rng.chance(1, 2)) *s = rng.nonzero_rational(-5, 5);
  return p;
}

const std::vector<std::string>& labels6() {
  static const std::vector<std::string> l = {"x", "y", "z",
                                             "e1", "e2", "e3"};
  return l;
}

AdmissibleChange random_case1(Rng& rng) {
  AdmissibleChange g;
  g.A1 = rng.nonzero_rational(-5, 5);
  g.B2 = rng.nonzero_rational(-5, 5);
  g.R3 = rng.nonzero_rational(-5, 5);
  g.A3 = rng.rational(-5, 5);
  g.B3 = rng.rational(-5, 5);
  g.P1 = rng.rational(-5, 5);
  g.P2 = rng.rational(-5, 5);
  g.P3 = rng.rational(-5, 5);
  g.Q1 = rng.rational(-5, 5);
  g.Q2 = rng.rational(-5, 5);
  g.Q3 = rng.rational(-5, 5);
  g.R1 = rng.rational(-5, 5);
  return g;
}

AdmissibleChange random_case2(Rng& rng) {
  AdmissibleChange g = random_case1(rng);
  g.R1 = Rational(0);  // ignored by case 2, kept zero for clarity
  g.R3 = Rational(0);
  return g;
}

}  // namespace

TEST_CASE("minimal faithful module: tables and matrix law") {
  MinFaithfulModule M = build_min_rep(1);
  CHECK(M.m == 1);
  CHECK(M.heisenberg.dim() == 3);
  CHECK(M.module_labels == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(M.combined.dim() == 6);
  // Module action rows: (e2, x1) -> e1, (e3, y1) -> e2, (e3, z) -> e1.
  std::size_t x = M.combined.index_of("x1");
  std::size_t y = M.combined.index_of("y1");
  std::size_t z = M.combined.index_of("z");
  std::size_t e1 = M.combined.index_of("e1");
  std::size_t e2 = M.combined.index_of("e2");
  std::size_t e3 = M.combined.index_of("e3");
  CHECK(M.combined.product(e2, x) == Vec{{e1, Rational(1)}});
  CHECK(M.combined.product(e3, y) == Vec{{e2, Rational(1)}});
  CHECK(M.combined.product(e3, z) == Vec{{e1, Rational(1)}});
  CHECK(M.combined.product(y, x) == Vec{{z, Rational(1)}});
  CHECK(M.combined.product(x, y) == Vec{{z, Rational(-1)}});
  CHECK(M.combined.product(e1, x).empty());
  CHECK(leibniz_check(M.combined).ok);

  // phi(x1) = E_{1,2} over a 3-dimensional module.
  const Matrix& phix = M.phi.at("x1");
  CHECK(phix.rows() == 3);
  CHECK(phix.at(0, 1) == Rational(1));

  for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    MinFaithfulModule Mm = build_min_rep(m);
    CHECK(Mm.phi.at("z").rows() == m + 2);
    CHECK(matrix_law_holds(Mm));
    CHECK(leibniz_check(Mm.combined).ok);
  }
  CHECK_THROWS_AS(build_min_rep(0), BadDimensionError);
}

TEST_CASE("m = 2 commutator matrices reproduce phi(z)") {
  MinFaithfulModule M = build_min_rep(2);
  const Matrix& px = M.phi.at("x1");
  const Matrix& py = M.phi.at("y1");
  const Matrix& pz = M.phi.at("z");
  CHECK(pz.at(0, 3) == Rational(1));  // E_{1,4}
  // [y1, x1] = z and the law phi([u,v]) = phi(v)phi(u) - phi(u)phi(v)
  // give phi(z) = phi(x1) phi(y1) - phi(y1) phi(x1) = E_{1,2} E_{2,4}.
  Matrix comm(4, 4);
  Matrix prod1 = px * py;
  Matrix prod2 = py * px;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      comm.at(i, j) = prod1.at(i, j) - prod2.at(i, j);
  CHECK(comm == pz);
}

TEST_CASE("general family: zero point, module rows, symmetry guard") {
  GeneralFamilyParams zero;
  zero.m = 2;
  Algebra A = build_general_family(zero);
  CHECK(A.dim() == 9);
  CHECK(leibniz_check(A).ok);
  std::size_t x1 = A.index_of("x1"), y1 = A.index_of("y1");
  std::size_t x2 = A.index_of("x2"), y2 = A.index_of("y2");
  std::size_t z = A.index_of("z");
  CHECK(A.product(y1, x1) == Vec{{z, Rational(1)}});
  CHECK(A.product(y2, x2) == Vec{{z, Rational(1)}});
  CHECK(A.product(x1, y1) == Vec{{z, Rational(-1)}});
  CHECK(A.product(x1, y2).empty());
  CHECK(A.product(A.index_of("e2"), x1) == Vec{{A.index_of("e1"), Rational(1)}});
  CHECK(A.product(A.index_of("e4"), z) == Vec{{A.index_of("e1"), Rational(1)}});

  // tau shows up in [x_i, y_i] and [z, x_1].
  GeneralFamilyParams withtau = zero;
  withtau.tau = Rational(1);
  Algebra B = build_general_family(withtau);
  CHECK(B.product(z, x1) == Vec{{B.index_of("e1"), Rational(1)}});
  CHECK(B.product(x1, y1) ==
        Vec{{z, Rational(-1)}, {B.index_of("e2"), Rational(1)}});
  CHECK(leibniz_check(B).ok);

  CHECK(general_family_param_count(2) == 26);
  CHECK_THROWS_AS(build_general_family(GeneralFamilyParams{1, {}, {}, {}, {}, {}, {}, {}}),
                  BadDimensionError);

  GeneralFamilyParams asym = zero;
  asym.alpha[{1, 1, 3}] = Rational(1);  // alpha_{1,1}^3 != alpha_{1,2}^2 = 0
  CHECK_THROWS_AS(build_general_family(asym), SymmetryViolationError);
}

TEST_CASE("general family: random members satisfy the identity exactly") {
  Rng rng(181);
  for (int trial = 0; trial < 10; ++trial) {
    GeneralFamilyParams p = random_general_params(2, rng);
    Algebra A = build_general_family(p);
    CHECK(leibniz_check(A).ok);
    GeneralFamilyParams q = read_general_family_params(A, 2);
    CHECK(build_general_family(q).same_table(A));
  }
  GeneralFamilyParams p3 = random_general_params(3, rng);
  Algebra A3 = build_general_family(p3);
  CHECK(A3.dim() == 12);
  CHECK(leibniz_check(A3).ok);
  CHECK(build_general_family(read_general_family_params(A3, 3)).same_table(A3));

  // A table outside the family shape is rejected.
  Algebra bad = build_general_family(random_general_params(2, rng));
  bad.set_product(bad.index_of("x1"), bad.index_of("e1"),
                  Vec{{bad.index_of("e2"), Rational(1)}});
  CHECK_THROWS_AS(read_general_family_params(bad, 2), InconsistentError);
}

TEST_CASE("one-pair family tables: frozen products") {
  Algebra A = build_L(tuple9(0, 0, 0, 0, 0, 0, 0, 0, 0));
  CHECK(A.dim() == 6);
  CHECK(A.basis() == labels6());
  CHECK(A.product(4, 0) == Vec{{3, Rational(1)}});  // [e2,x] = e1
  CHECK(A.product(5, 1) == Vec{{4, Rational(1)}});  // [e3,y] = e2
  CHECK(A.product(5, 2) == Vec{{3, Rational(1)}});  // [e3,z] = e1
  CHECK(A.product(0, 1) == Vec{{2, Rational(-1)}});  // [x,y] = -z
  CHECK(A.product(1, 0) == Vec{{2, Rational(1)}});   // [y,x] = z
  CHECK(A.product(0, 0).empty());
  CHECK(A.product(2, 0).empty());

  Algebra B = build_L(tuple9(0, 0, 1, 0, 0, 0, 0, 0, 0));
  CHECK(B.product(0, 0) == Vec{{5, Rational(1)}});   // [x,x] = e3
  CHECK(B.product(0, 2) == Vec{{4, Rational(1)}});   // [x,z] = alpha3 e2
  CHECK(B.product(2, 0) == Vec{{4, Rational(-2)}});  // [z,x] = -2 alpha3 e2
  CHECK(leibniz_check(B).ok);

  CHECK(tuple9(1, 2, 3, 4, 5, 6, 7, 8, 9).str() == "L(1,2,3,4,5,6,7,8,9)");

  Rng rng(33);
  for (int trial = 0; trial < 25; ++trial)
    CHECK(leibniz_check(build_L(random_tuple(rng))).ok);
}

TEST_CASE("residual table builder") {
  ParamFamilyM1 p = tuple9(0, 0, 1, 2, 0, 0, 0, 1, 0);
  CHECK(build_L_residual(p, Rational(0)).same_table(build_L(p)));
  Algebra R = build_L_residual(p, Rational(2));
  CHECK(R.product(5, 0) == Vec{{3, Rational(2)}});  // [e3,x] = 2 e1
  CHECK_FALSE(R.same_table(build_L(p)));
}

TEST_CASE("admissible changes: identity fixes every tuple") {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    p.alpha3 = Rational(0);
    CHECK(transform_params_case1(p, AdmissibleChange::identity()) == p);

    ParamFamilyM1 q0 = random_tuple(rng);
    q0.alpha3 = rng.nonzero_rational(-5, 5);  // prenormalize needs case 2
    ParamFamilyM1 q = case2_prenormalize(q0).params;
    CHECK(transform_params_case2(q, AdmissibleChange::identity()) == q);
  }
}

TEST_CASE("admissible changes: conjugation reproduces the printed table") {
  Rng rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    p.alpha3 = Rational(0);
    AdmissibleChange g = random_case1(rng);
    Matrix M = assemble_change_matrix_case1(p, g);
    ParamFamilyM1 q = transform_params_case1(p, g);
    CHECK(build_L(p).change_of_basis(M, labels6()).same_table(build_L(q)));
    CHECK(nullity_pattern(q) == nullity_pattern(p));
  }
  for (int trial = 0; trial < 40; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    p.alpha1 = Rational(0);
    p.alpha2 = Rational(0);
    p.alpha3 = Rational(1);
    AdmissibleChange g = random_case2(rng);
    Matrix M = assemble_change_matrix_case2(p, g);
    ParamFamilyM1 q = transform_params_case2(p, g);
    CHECK(build_L(p).change_of_basis(M, labels6()).same_table(build_L(q)));
    CHECK(nullity_pattern(q) == nullity_pattern(p));
  }
}

TEST_CASE("admissible changes: targeted coefficient moves") {
  Rng rng(57);
  // P3 = -delta2 * A1 clears the delta2 slot (with A1 = 1: P3 = -delta2).
  for (int trial = 0; trial < 10; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    p.alpha3 = Rational(0);
    AdmissibleChange g = AdmissibleChange::identity();
    g.P3 = -p.delta2;
    CHECK(transform_params_case1(p, g).delta2.is_zero());
  }
  // Case 2 pure A1-scaling: the derived e-block picks up (A1^3, A1^2, A1^2),
  // so eta1 and delta2 both divide by A1 (their difference stays invariantly
  // nonzero or zero), while theta1 and beta2 divide by A1^2.
  for (int trial = 0; trial < 10; ++trial) {
    ParamFamilyM1 p0 = random_tuple(rng);
    p0.alpha3 = rng.nonzero_rational(-5, 5);  // prenormalize needs case 2
    ParamFamilyM1 p = case2_prenormalize(p0).params;
    AdmissibleChange g = AdmissibleChange::identity();
    g.A1 = rng.nonzero_rational(-5, 5);
    ParamFamilyM1 q = transform_params_case2(p, g);
    CHECK(q.eta1 == p.eta1 / g.A1);
    CHECK(q.delta2 == p.delta2 / g.A1);
    CHECK(q.theta1 == p.theta1 / (g.A1 * g.A1));
    // Case 2 pure B2-scaling: the e-block scales as (B2, B2, 1), so theta1
    // and beta2 are multiplied by B2 while eta1 and delta2 are untouched.
    AdmissibleChange h = AdmissibleChange::identity();
    h.B2 = rng.nonzero_rational(-5, 5);
    ParamFamilyM1 r = transform_params_case2(p, h);
    CHECK(r.theta1 == p.theta1 * h.B2);
    CHECK(r.beta2 == p.beta2 * h.B2);
    CHECK(r.eta1 == p.eta1);
  }
}

TEST_CASE("admissible changes: gates") {
  ParamFamilyM1 c1 = tuple9(0, 1, 0, 1, 0, 0, 0, 1, 0);
  ParamFamilyM1 c2 = tuple9(0, 0, 1, 1, 0, 0, 0, 1, 0);
  AdmissibleChange g = AdmissibleChange::identity();

  g.A1 = Rational(0);
  CHECK_THROWS_AS(assemble_change_matrix_case1(c1, g), InadmissibleChangeError);
  CHECK_THROWS_AS(assemble_change_matrix_case2(c2, g), InadmissibleChangeError);

  g = AdmissibleChange::identity();
  g.R3 = Rational(0);
  CHECK_THROWS_AS(assemble_change_matrix_case1(c1, g), InadmissibleChangeError);

  // Wrong domain: case 1 requires alpha3 = 0, case 2 the (0,0,1) prefix.
  CHECK_THROWS_AS(assemble_change_matrix_case1(c2, AdmissibleChange::identity()),
                  InadmissibleChangeError);
  CHECK_THROWS_AS(assemble_change_matrix_case2(c1, AdmissibleChange::identity()),
                  InadmissibleChangeError);
  CHECK_THROWS_AS(
      assemble_change_matrix_case2(tuple9(0, 2, 1, 0, 0, 0, 0, 0, 0),
                                   AdmissibleChange::identity()),
      InadmissibleChangeError);
}

TEST_CASE("case 2 pre-normalization") {
  // Clean case: alpha2 = 0 leaves no residual.
  ParamFamilyM1 clean = tuple9(5, 0, 2, 4, 6, 1, 3, 2, 7);
  Case2Prenormalized pre = case2_prenormalize(clean);
  CHECK(pre.residual_e3x.is_zero());
  CHECK(pre.params.alpha1.is_zero());
  CHECK(pre.params.alpha2.is_zero());
  CHECK(pre.params.alpha3.is_one());
  Matrix M = case2_prenormalize_matrix(clean);
  CHECK(build_L(clean)
            .change_of_basis(M, labels6())
            .same_table(build_L(pre.params)));

  // alpha2 != 0: the rebased table carries [e3,x] = (alpha2/alpha3) e1.
  ParamFamilyM1 gap = tuple9(1, 2, 3, 4, 5, 6, 7, 8, 9);
  pre = case2_prenormalize(gap);
  CHECK(pre.residual_e3x == Rational(2, 3));
  CHECK(pre.params.alpha3.is_one());
  M = case2_prenormalize_matrix(gap);
  CHECK(build_L(gap)
            .change_of_basis(M, labels6())
            .same_table(build_L_residual(pre.params, pre.residual_e3x)));

  CHECK_THROWS_AS(case2_prenormalize(tuple9(1, 1, 0, 0, 0, 0, 0, 0, 0)),
                  InadmissibleChangeError);
}

TEST_CASE("residual coefficient transforms as rho / B2") {
  Rng rng(58);
  for (int trial = 0; trial < 10; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    p.alpha2 = rng.nonzero_rational(-5, 5);
    p.alpha3 = rng.nonzero_rational(-5, 5);
    Case2Prenormalized pre = case2_prenormalize(p);
    REQUIRE_FALSE(pre.residual_e3x.is_zero());

    AdmissibleChange g = random_case2(rng);
    // With P3 or Q3 nonzero the x' / y' vectors pick up an e3 component, so
    // the residual [e3,x] term feeds the derived e-block and the rho-free
    // matrix assembly no longer matches the moved table.  The clean
    // rho' = rho / B2 law holds on the P3 = Q3 = 0 slice.
    g.P3 = Rational(0);
    g.Q3 = Rational(0);
    Algebra A = build_L_residual(pre.params, pre.residual_e3x);
    Matrix M = assemble_change_matrix_case2(pre.params, g);
    Algebra moved = A.change_of_basis(M, labels6());
    ParamFamilyM1 q = transform_params_case2(pre.params, g);
    CHECK(moved.same_table(build_L_residual(q, pre.residual_e3x / g.B2)));
  }
}

TEST_CASE("nullity pattern: flags and text") {
  NullityPattern np = nullity_pattern(tuple9(0, 1, 0, 1, 0, 0, 0, 1, 0));
  CHECK(np.case_tag == 1);
  CHECK(np.alpha2_nz);
  CHECK(np.beta1_nz);
  CHECK(np.eta_nz);
  CHECK_FALSE(np.theta_nz);

  NullityPattern n2 = nullity_pattern(tuple9(1, 2, 3, 4, 5, 6, 7, 8, 9));
  CHECK(n2.case_tag == 2);
  CHECK(n2.str() == "case 2: beta1!=0, eta1-delta2!=0, theta1-beta2!=0");
}

TEST_CASE("classification list: 21 canonical entries") {
  const auto& list = classify_list();
  REQUIRE(list.size() == 21);

  std::size_t lambda_count = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].has_lambda) ++lambda_count;
    if (i < 14)
      CHECK(list[i].rep.alpha3.is_zero());
    else
      CHECK(list[i].rep.alpha3.is_one());
  }
  CHECK(lambda_count == 3);
  CHECK(list[0].has_lambda);
  CHECK(list[3].has_lambda);
  CHECK(list[14].has_lambda);

  CHECK(list[13].rep == tuple9(0, 0, 0, 0, 0, 0, 0, 0, 0));
  CHECK(list[20].rep == tuple9(0, 0, 1, 0, 0, 0, 0, 0, 0));
  CHECK(list[0].name().find("lambda") != std::string::npos);
  CHECK(list[13].name() == "L(0,0,0,0,0,0,0,0,0)");

  ParamFamilyM1 at5 = list[0].at(Rational(5));
  CHECK(at5.theta1 == Rational(5));
  ParamFamilyM1 at0 = list[0].at(Rational(0));
  CHECK(at0 == list[0].rep);

  // Patterns are pairwise distinct at lambda = 0 and at lambda = 1; a
  // lambda-family's two values differ exactly in the theta flag.
  for (long lam : {0L, 1L}) {
    std::vector<std::string> seen;
    for (const auto& e : list) {
      ParamFamilyM1 rep = e.has_lambda ? e.at(Rational(lam)) : e.rep;
      std::string s = nullity_pattern(rep).str();
      for (const auto& prev : seen) CHECK(prev != s);
      seen.push_back(std::move(s));
    }
  }
  for (std::size_t f : {std::size_t{0}, std::size_t{3}, std::size_t{14}}) {
    NullityPattern a = nullity_pattern(list[f].at(Rational(1)));
    NullityPattern b = nullity_pattern(list[f].at(Rational(2)));
    CHECK(a == b);  // lambda is invisible to the pattern once nonzero
  }
}

TEST_CASE("normalization: frozen examples") {
  // Case 1 lambda-family.
  NormalForm nf = normalize_m1(tuple9(0, 5, 0, 7, 0, 0, 0, 3, 0));
  CHECK(nf.entry_index == 0);
  REQUIRE(nf.lambda.has_value());
  CHECK(nf.lambda->is_zero());
  CHECK(nf.exact_hit);
  CHECK_FALSE(nf.theta_square_class.has_value());
  CHECK(nf.residual_e3x.is_zero());
  CHECK(nf.reached == classify_list()[0].at(Rational(0)));
  CHECK(build_L(tuple9(0, 5, 0, 7, 0, 0, 0, 3, 0))
            .change_of_basis(nf.witness, labels6())
            .same_table(build_L(nf.reached)));

  // Zero tuple: the abelian-pattern entry.
  nf = normalize_m1(tuple9(0, 0, 0, 0, 0, 0, 0, 0, 0));
  CHECK(nf.entry_index == 13);
  CHECK(nf.exact_hit);
  CHECK_FALSE(nf.lambda.has_value());
  CHECK(nf.reached == classify_list()[13].rep);

  // Case 2 lambda-family with a residual.
  ParamFamilyM1 gap = tuple9(1, 2, 3, 4, 5, 6, 7, 8, 9);
  nf = normalize_m1(gap);
  CHECK(nf.entry_index == 14);
  REQUIRE(nf.lambda.has_value());
  CHECK(*nf.lambda == Rational(1, 3));
  CHECK_FALSE(nf.exact_hit);
  CHECK(nf.residual_e3x == Rational(24));
  CHECK(build_L(gap)
            .change_of_basis(nf.witness, labels6())
            .same_table(build_L_residual(nf.reached, nf.residual_e3x)));
  CHECK(nf.reached == classify_list()[14].at(Rational(1, 3)));
}

TEST_CASE("normalization: theta slot square classes over the rationals") {
  // A*T = 2 is not a rational square: the slot lands on its squarefree
  // kernel and the obstruction is reported.
  NormalForm nf = normalize_m1(tuple9(0, 1, 0, 1, 0, 0, 0, 0, 2));
  CHECK(nf.entry_index == 1);
  CHECK_FALSE(nf.exact_hit);
  REQUIRE(nf.theta_square_class.has_value());
  CHECK(*nf.theta_square_class == Rational(2));
  CHECK(nf.reached.theta1 == Rational(2));
  CHECK(build_L(tuple9(0, 1, 0, 1, 0, 0, 0, 0, 2))
            .change_of_basis(nf.witness, labels6())
            .same_table(build_L(nf.reached)));

  // Same square class, same landing point.
  NormalForm nf8 = normalize_m1(tuple9(0, 1, 0, 1, 0, 0, 0, 0, 8));
  CHECK(nf8.entry_index == 1);
  CHECK(nf8.reached == nf.reached);

  // A perfect square lands exactly on the canonical representative.
  NormalForm nf4 = normalize_m1(tuple9(0, 1, 0, 1, 0, 0, 0, 0, 4));
  CHECK(nf4.entry_index == 1);
  CHECK(nf4.exact_hit);
  CHECK(nf4.reached == classify_list()[1].rep);
}

TEST_CASE("normalization: random tuples always land with an exact witness") {
  Rng rng(515);
  for (int trial = 0; trial < 60; ++trial) {
    ParamFamilyM1 p = random_tuple(rng);
    NormalForm nf = normalize_m1(p);
    CHECK(nf.entry_index < 21);
    const ClassEntry& e = classify_list()[nf.entry_index];
    CHECK(e.has_lambda == nf.lambda.has_value());

    // The residual channel opens exactly for alpha2 != 0 != alpha3.
    const bool gap = !p.alpha2.is_zero() && !p.alpha3.is_zero();
    CHECK(nf.residual_e3x.is_zero() == !gap);
    CHECK(nf.exact_hit ==
          (!nf.theta_square_class.has_value() && nf.residual_e3x.is_zero()));

    Algebra conj = build_L(p).change_of_basis(nf.witness, labels6());
    CHECK(conj.same_table(build_L_residual(nf.reached, nf.residual_e3x)));
    if (nf.exact_hit) {
      ParamFamilyM1 target =
          e.has_lambda ? e.at(*nf.lambda) : e.rep;
      CHECK(nf.reached == target);
    }
  }
}

TEST_CASE("lambda rigidity for the three scalar families") {
  Rng rng(616);
  for (std::size_t family : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
    CHECK(lambda_rigidity_check(family, Rational(2), rng, 20));
    CHECK(lambda_rigidity_check(family, Rational(-1, 3), rng, 20));
    CHECK(lambda_rigidity_check(family, Rational(0), rng, 20));
  }
}
