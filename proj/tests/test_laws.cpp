#include <doctest.h>

#include "gencliff/laws.hpp"
#include "testutil.hpp"

using namespace gencliff;
using testutil::Rng;

namespace {

NcPoly parse_form(const char* text, const RingHandle& ring, std::vector<std::string> vars)
{
    CtxPtr ctx = make_context(ring, XMode::Commuting, Alphabet{}, Alphabet(std::move(vars)));
    return parse_poly(text, ctx);
}

Scalar eval_commutative(const NcPoly& f, const std::vector<Scalar>& z)
{
    Scalar out = Scalar::zero(f.context()->ring);
    for (const auto& [mon, c] : f.terms()) {
        Scalar v = c;
        for (uint32_t letter : mon.xpart)
            v *= z[letter];
        out += v;
    }
    return out;
}

/// Solves M * T = rhs by elimination, where M has scalar entries and the
/// unknowns/right-hand sides are polynomials. Requires full column rank and
/// a consistent system.
std::vector<NcPoly> solve_linear(std::vector<std::vector<Scalar>> M, std::vector<NcPoly> rhs, const CtxPtr& ctx)
{
    size_t rows = M.size(), cols = M[0].size();
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && M[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(M[p], M[rank]);
        std::swap(rhs[p], rhs[rank]);
        Scalar inv = M[rank][c].inv();
        for (auto& v : M[rank])
            v *= inv;
        rhs[rank] = rhs[rank].scaled(inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c].is_zero())
                continue;
            Scalar factor = M[r][c];
            for (size_t cc = 0; cc < cols; ++cc)
                M[r][cc] -= factor * M[rank][cc];
            rhs[r] -= rhs[rank].scaled(factor);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    REQUIRE(rank == cols);
    for (size_t r = rank; r < rows; ++r)
        REQUIRE(rhs[r].is_zero());  // consistency
    std::vector<NcPoly> out(cols, NcPoly::zero(ctx));
    for (size_t i = 0; i < rank; ++i)
        out[pivot_col[i]] = rhs[i];
    return out;
}

HomLaw identity_law(const RingHandle& ring)
{
    HomLaw lambda = HomLaw::algebra_law(ring, 2, 1, Alphabet({"a", "b"}));
    CtxPtr actx = lambda.target_context();
    lambda.set_entry({1, 0}, NcPoly::generator(actx, 0));
    lambda.set_entry({0, 1}, NcPoly::generator(actx, 1));
    return lambda;
}

HomLaw random_law(Rng& rng, const RingHandle& ring, int rank, int degree, bool scalar_target)
{
    HomLaw law = scalar_target ? HomLaw::scalar_law(ring, rank, degree)
                               : HomLaw::algebra_law(ring, rank, degree, Alphabet({"a", "b"}));
    for (const auto& nu : gamma_basis(rank, degree)) {
        if (rng() % 3 == 0)
            continue;
        if (scalar_target)
            law.set_entry(nu, testutil::random_scalar(rng, ring));
        else
            law.set_entry(nu, testutil::random_poly(rng, law.target_context(), 3, 2, 0));
    }
    return law;
}

}  // namespace

TEST_CASE("gamma basis enumeration")
{
    CHECK(gamma_basis(2, 2) == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(gamma_basis(4, 0) == std::vector<Exponents>{{0, 0, 0, 0}});
    CHECK(gamma_basis(3, 2).size() == 6);
    CHECK(gamma_basis(3, 2).front() == Exponents{2, 0, 0});
    CHECK(gamma_basis(3, 2).back() == Exponents{0, 0, 2});
}

TEST_CASE("divided powers")
{
    RingHandle qq = make_ring("QQ");
    auto e1 = std::vector<Scalar>{Scalar::one(qq), Scalar::zero(qq)};
    auto dp = divided_power(e1, 3);
    REQUIRE(dp.size() == 4);
    CHECK(dp[0].is_one());
    for (size_t i = 1; i < 4; ++i)
        CHECK(dp[i].is_zero());

    auto ones = std::vector<Scalar>{Scalar::one(qq), Scalar::one(qq)};
    auto dp2 = divided_power(ones, 2);
    CHECK(dp2 == std::vector<Scalar>{Scalar::one(qq), Scalar::one(qq), Scalar::one(qq)});

    auto two = std::vector<Scalar>{Scalar::of(qq, 2), Scalar::zero(qq)};
    CHECK(divided_power(two, 2)[0] == Scalar::of(qq, 4));
}

TEST_CASE("law of a commutative form")
{
    RingHandle f2 = make_ring("GF(2)");
    HomLaw law = law_from_commutative_poly(parse_form("y", f2, {"x", "y"}), 1);
    CHECK(law.scalar_entry({1, 0}).is_zero());
    CHECK(law.scalar_entry({0, 1}).is_one());

    RingHandle qq = make_ring("QQ");
    HomLaw q = law_from_commutative_poly(parse_form("x^2 + y^2", qq, {"x", "y"}), 2);
    CHECK(q.scalar_entry({2, 0}).is_one());
    CHECK(q.scalar_entry({1, 1}).is_zero());
    CHECK(q.scalar_entry({0, 2}).is_one());

    CHECK(law_from_commutative_poly(parse_form("0", qq, {"x", "y"}), 3).is_zero());

    CHECK_THROWS_WITH_AS(law_from_commutative_poly(parse_form("x^2 + y", qq, {"x", "y"}), 2),
                         doctest::Contains("NotHomogeneous"), Error);
}

TEST_CASE("law evaluation")
{
    RingHandle f2 = make_ring("GF(2)");
    HomLaw law = law_from_commutative_poly(parse_form("y", f2, {"x", "y"}), 1);
    CHECK(law.eval_scalar({Scalar::one(f2), Scalar::zero(f2)}).is_zero());
    CHECK(law.eval_scalar({Scalar::one(f2), Scalar::one(f2)}).is_one());

    RingHandle qq = make_ring("QQ");
    HomLaw q = law_from_commutative_poly(parse_form("x^2 + 3*x*y", qq, {"x", "y"}), 2);
    CHECK(q.eval_scalar({Scalar::zero(qq), Scalar::zero(qq)}).is_zero());
}

TEST_CASE("generic expansion")
{
    RingHandle qq = make_ring("QQ");
    HomLaw lambda = identity_law(qq);
    NcPoly g = lambda.generic(Alphabet({"x", "y"}));
    CHECK(g == parse_poly("a*x + b*y", g.context()));

    HomLaw fy = law_from_commutative_poly(parse_form("y", qq, {"x", "y"}), 1);
    CHECK(format_poly(fy.generic(Alphabet({"x", "y"}))) == "y");

    HomLaw zero = HomLaw::scalar_law(qq, 2, 2);
    CHECK(zero.generic(Alphabet({"x", "y"})).is_zero());
}

TEST_CASE("product law against the pointwise linear-system oracle")
{
    RingHandle f3 = make_ring("GF(3)");
    HomLaw lambda = identity_law(f3);
    HomLaw square = law_product(lambda, lambda);
    CHECK(square.degree() == 2);

    // oracle: lambda(z)^2 at every z of GF(3)^2 determines the table through
    // the divided-power expansion; solve the resulting linear system
    auto basis = gamma_basis(2, 2);
    std::vector<std::vector<Scalar>> M;
    std::vector<NcPoly> rhs;
    CtxPtr actx = lambda.target_context();
    for (int64_t zx = 0; zx < 3; ++zx)
        for (int64_t zy = 0; zy < 3; ++zy) {
            std::vector<Scalar> z{Scalar::of(f3, zx), Scalar::of(f3, zy)};
            M.push_back(divided_power(z, 2));
            NcPoly v = lambda.eval(z);
            rhs.push_back(v * v);
        }
    auto table = solve_linear(std::move(M), std::move(rhs), actx);
    CHECK(table[0] == parse_poly("a^2", actx));
    CHECK(table[1] == parse_poly("a*b + b*a", actx));
    CHECK(table[2] == parse_poly("b^2", actx));
    for (size_t i = 0; i < basis.size(); ++i)
        CHECK(square.entry(basis[i]) == table[i]);
}

TEST_CASE("unit and zero laws under products")
{
    RingHandle qq = make_ring("QQ");
    HomLaw psi = identity_law(qq);

    HomLaw unit = HomLaw::scalar_law(qq, 2, 0);
    unit.set_entry({0, 0}, Scalar::one(qq));
    CHECK(law_product(unit, psi) == psi);

    HomLaw zero = HomLaw::scalar_law(qq, 2, 3);
    CHECK(law_product(psi, zero).is_zero());
}

TEST_CASE("sums and components of law families")
{
    RingHandle qq = make_ring("QQ");
    HomLaw lambda2 = law_product(identity_law(qq), identity_law(qq));

    PolyLaw family = PolyLaw::of(lambda2);
    family.add(identity_law(qq));
    CHECK(family.component(2) == lambda2);
    CHECK(family.component(1) == identity_law(qq));
    CHECK(family.component(3).is_zero());

    PolyLaw negated = PolyLaw::of(-lambda2);
    PolyLaw sum = family + negated;
    CHECK(sum.components().size() == 1);  // only the degree-1 part survives
    CHECK(sum.component(2).is_zero());
    CHECK((PolyLaw::of(lambda2) + negated).components().empty());
}

TEST_CASE("correspondence roundtrip on random laws")
{
    Rng rng(314159);
    for (const char* spec : {"GF(5)", "QQ"}) {
        RingHandle ring = make_ring(spec);
        for (int c = 0; c < 150; ++c) {
            int rank = 1 + int(rng() % 3);
            int degree = int(rng() % 5);
            bool scalar = rng() % 2 == 0;
            HomLaw law = random_law(rng, ring, rank, degree, scalar);
            std::vector<std::string> vars;
            for (int i = 0; i < rank; ++i)
                vars.push_back("x" + std::to_string(i + 1));
            NcPoly g = law.generic(Alphabet(vars));
            HomLaw back = law_from_generic(g, rank, degree);
            for (const auto& nu : gamma_basis(rank, degree))
                CHECK(back.entry(nu) == law.entry(nu).in_context(back.target_context()));
        }
    }
}

TEST_CASE("evaluation naturality under scaling")
{
    Rng rng(2718);
    RingHandle qq = make_ring("QQ");
    for (int i = 0; i < 300; ++i) {
        int rank = 1 + int(rng() % 3);
        int degree = int(rng() % 4);
        HomLaw law = random_law(rng, qq, rank, degree, false);
        std::vector<Scalar> z;
        for (int j = 0; j < rank; ++j)
            z.push_back(testutil::random_scalar(rng, qq));
        Scalar r = testutil::random_scalar(rng, qq);
        std::vector<Scalar> rz;
        for (const auto& v : z)
            rz.push_back(v * r);
        CHECK(law.eval(rz) == law.eval(z).scaled(r.pow(uint64_t(degree))));
    }
}

TEST_CASE("product evaluation is pointwise multiplication")
{
    Rng rng(161803);
    RingHandle f5 = make_ring("GF(5)");
    for (int i = 0; i < 200; ++i) {
        int rank = 1 + int(rng() % 2);
        HomLaw a = random_law(rng, f5, rank, int(rng() % 3), false);
        HomLaw b = random_law(rng, f5, rank, int(rng() % 3), false);
        HomLaw ab = law_product(a, b);
        for (int t = 0; t < 20; ++t) {
            std::vector<Scalar> z;
            for (int j = 0; j < rank; ++j)
                z.push_back(testutil::random_scalar(rng, f5));
            CHECK(ab.eval(z) == a.eval(z) * b.eval(z).in_context(a.eval(z).context()));
        }
    }
}

TEST_CASE("exhaustive agreement with direct substitution over small fields")
{
    Rng rng(112358);
    for (int64_t p : {2, 3}) {
        RingHandle ring = make_ring("GF(" + std::to_string(p) + ")");
        for (int n = 1; n <= 2; ++n) {
            std::vector<std::string> vars;
            for (int i = 0; i < n; ++i)
                vars.push_back("x" + std::to_string(i + 1));
            CtxPtr fctx = make_context(ring, XMode::Commuting, Alphabet{}, Alphabet(vars));
            for (int d = 1; d <= 4; ++d) {
                NcPoly f(fctx);
                for (const auto& nu : gamma_basis(n, d))
                    f.add_term(MixedMonomial{{}, exponents_to_word(nu)}, testutil::random_scalar(rng, ring));
                HomLaw law = law_from_commutative_poly(f, d);
                std::vector<Scalar> z(size_t(n), Scalar::zero(ring));
                int64_t points = 1;
                for (int i = 0; i < n; ++i)
                    points *= p;
                for (int64_t code = 0; code < points; ++code) {
                    int64_t rest = code;
                    for (int i = 0; i < n; ++i) {
                        z[size_t(i)] = Scalar::of(ring, rest % p);
                        rest /= p;
                    }
                    CHECK(law.eval_scalar(z) == eval_commutative(f, z));
                }
            }
        }
    }
}

TEST_CASE("coefficient base change from ZZ")
{
    RingHandle zz = make_ring("ZZ");
    HomLaw law = law_from_commutative_poly(parse_form("3*x^2 + 2*x*y - y^2", zz, {"x", "y"}), 2);
    HomLaw mod2 = law_change_ring(law, make_ring("GF(2)"));
    CHECK(mod2.scalar_entry({2, 0}).is_one());
    CHECK(mod2.scalar_entry({1, 1}).is_zero());
    CHECK(mod2.scalar_entry({0, 2}).is_one());
    CHECK_THROWS_AS(law_change_ring(mod2, zz), Error);
}
