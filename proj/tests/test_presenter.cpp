#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "platt/errors.hpp"
#include "platt/generate.hpp"
#include "platt/presenter.hpp"

#include <random>

using namespace platt;

TEST_CASE("generator determinism and validity") {
    for (const char* kind : {"trivial", "regular", "augmentation", "permutation+conjugate",
                             "kernel-of-random-perm-map"}) {
        InstanceSpec spec{77, 3, 2, kind, {}};
        GLattice a = generate_lattice(spec);
        GLattice b = generate_lattice(spec);
        CHECK(a.rank == b.rank);
        CHECK(a.action == b.action);
    }
    InstanceSpec bad{1, 2, 1, "nonsense", {}};
    CHECK_THROWS_AS(generate_lattice(bad), Error);

    InstanceSpec perm{5, 2, 2, "permutation+conjugate", {1, 1, 1}};
    GLattice m = generate_lattice(perm);
    CHECK(m.rank == 7);
    auto verdict = is_permutation(m);
    CHECK(verdict.value);
    CHECK(perm_multiplicities(m) == std::vector<long>{1, 1, 1});
}

TEST_CASE("permutation realization round trip") {
    for (long p : {2L, 3L}) {
        for (std::vector<long> f : {std::vector<long>{1, 1}, std::vector<long>{0, 2},
                                    std::vector<long>{2, 0}}) {
            GLattice omega = GLattice::permutation_lattice(p, 1, f);
            Realization r = realize_permutation(h0(omega));
            CHECK(r.multiplicities == f);
            for (const auto& c : r.phi.comp) CHECK(c.mat.is_unimodular(p));
        }
        GLattice omega = GLattice::permutation_lattice(p, 2, {1, 0, 1});
        Realization r = realize_permutation(h0(omega));
        CHECK(r.multiplicities == std::vector<long>{1, 0, 1});
    }
}

TEST_CASE("realization of conjugated permutation lattices") {
    std::mt19937_64 rng(41);
    for (long p : {2L, 3L}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<long> f = random_multiplicities(p, 2, 12, rng);
            InstanceSpec spec{rng(), p, 2, "permutation+conjugate", f};
            GLattice m = generate_lattice(spec);
            Realization r = realize_permutation(h0(m));
            CHECK(r.multiplicities == f);
        }
    }
}

TEST_CASE("augmentation lattices are not Hilbert-90") {
    for (long p : {2L, 3L, 5L}) {
        Mackey x = h0(GLattice::augmentation(p, 1));
        CHECK_THROWS_WITH_AS(realize_permutation(x), doctest::Contains("Hilbert"), Error);
    }
}

TEST_CASE("presentation of a permutation module") {
    GLattice m = GLattice::permutation_lattice(3, 1, {1, 1});
    PermPresentation pres = present_lattice(m);
    CHECK(pres.omega0 == std::vector<long>{1, 1});
    CHECK(pres.omega1 == std::vector<long>{0, 0});
    CHECK(pres.inject.cols() == 0);
    CHECK(pres.project.is_unimodular(3));
}

TEST_CASE("presentation of the augmentation lattice") {
    GLattice m = GLattice::augmentation(3, 1);
    PermPresentation pres = present_lattice(m);
    CHECK(pres.omega0 == std::vector<long>{0, 1});
    CHECK(pres.omega1 == std::vector<long>{1, 0});
    presentation_verify(pres, m); // idempotent re-check
}

TEST_CASE("presentations of random lattices") {
    std::mt19937_64 rng(97);
    for (long p : {2L, 3L}) {
        for (int n : {1, 2}) {
            for (int trial = 0; trial < 4; ++trial) {
                GLattice m = random_lattice(p, n, 10, rng);
                PermPresentation pres = present_lattice(m);
                long balance = 0, orbit = 1;
                for (int k = 0; k <= n; ++k) {
                    balance += (pres.omega0[k] - pres.omega1[k]) * orbit;
                    orbit *= p;
                }
                CHECK(balance == static_cast<long>(m.rank));
            }
        }
    }
}

TEST_CASE("tampered presentations are rejected") {
    GLattice m = GLattice::augmentation(3, 1);
    PermPresentation pres = present_lattice(m);
    PermPresentation broken = pres;
    broken.project.at(0, 0) = broken.project.at(0, 0) + 1;
    CHECK_THROWS_AS(presentation_verify(broken, m), Error);
}

TEST_CASE("global dimension witnesses") {
    for (long p : {2L, 3L}) {
        GldimReport report = gldim_witness(p, 1);
        CHECK(report.b_length == 3);
        CHECK(report.ext3.free_rank == 0);
        CHECK(report.ext3.torsion == std::vector<int>{1});
        CHECK(report.max_i_injective_length <= 2);
        CHECK(report.max_h0_length <= 1);
    }
}
