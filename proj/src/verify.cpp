#include "latmat/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "latmat/divisor.hpp"
#include "latmat/engine.hpp"
#include "latmat/error.hpp"
#include "latmat/oracle.hpp"
#include "latmat/psi.hpp"

namespace latmat::verify {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t next() { return gen(); }
    std::size_t below(std::size_t k) { return k == 0 ? 0 : static_cast<std::size_t>(next() % k); }
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
    Rat rational() { return make_rat(Int(int_in(-9, 9)), Int(int_in(1, 9))); }
    Rat nonzero_rational() {
        Rat q = rational();
        while (q == 0) q = rational();
        return q;
    }
};

// A random sublattice of the divisor lattice of some N <= 360: a few random
// divisors closed under gcd and lcm, kept when the closure stays small.
FinitePoset random_divisor_host(Rng& rng, Int& n_out) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        const Int n(rng.int_in(2, 360));
        std::vector<Int> divs = divisors_of(n);
        std::vector<Int> pool;
        const std::size_t seeds = 1 + rng.below(3);
        for (std::size_t i = 0; i < seeds; ++i) pool.push_back(divs[rng.below(divs.size())]);

        bool grew = true;
        while (grew && pool.size() <= 16) {
            grew = false;
            const std::size_t count = pool.size();
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = a + 1; b < count; ++b) {
                    Int g, l;
                    mpz_gcd(g.get_mpz_t(), pool[a].get_mpz_t(), pool[b].get_mpz_t());
                    mpz_lcm(l.get_mpz_t(), pool[a].get_mpz_t(), pool[b].get_mpz_t());
                    for (const Int& v : {g, l}) {
                        if (std::find(pool.begin(), pool.end(), v) == pool.end()) {
                            pool.push_back(v);
                            grew = true;
                        }
                    }
                }
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        if (pool.size() <= 8) {
            n_out = n;
            return divisor_poset_on(pool);
        }
    }
    n_out = 6;
    return divisor_poset(Int(6));
}

// A random family of subsets of a 2- or 3-element universe closed under
// union and intersection, ordered by inclusion.
FinitePoset random_boolean_host(Rng& rng) {
    const unsigned k = 2 + static_cast<unsigned>(rng.below(2));
    const unsigned universe = 1u << k;
    std::vector<unsigned> pool;
    const std::size_t seeds = 2 + rng.below(3);
    for (std::size_t i = 0; i < seeds; ++i) {
        unsigned m = static_cast<unsigned>(rng.below(universe));
        if (std::find(pool.begin(), pool.end(), m) == pool.end()) pool.push_back(m);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = pool.size();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b) {
                for (unsigned v : {pool[a] & pool[b], pool[a] | pool[b]}) {
                    if (std::find(pool.begin(), pool.end(), v) == pool.end()) {
                        pool.push_back(v);
                        grew = true;
                    }
                }
            }
    }
    std::sort(pool.begin(), pool.end());
    const std::size_t m = pool.size();
    std::vector<ElementId> labels(m);
    std::vector<char> leq(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "s" + std::to_string(pool[i]);
        for (std::size_t j = 0; j < m; ++j)
            if ((pool[i] & pool[j]) == pool[i]) leq[i * m + j] = 1;
    }
    return FinitePoset::from_leq(std::move(labels), std::move(leq));
}

PosetFunction random_function(Rng& rng, const FinitePoset& p) {
    PosetFunction f(p);
    for (std::size_t i = 0; i < p.size(); ++i) f.set(i, rng.rational());
    return f;
}

// Semimultiplicative by construction: a scaled product of per-atom weights.
// On a divisor host the atoms are primes (weights per prime power); on a
// boolean host they are the universe bits.
PosetFunction random_semimult_divisor(Rng& rng, const FinitePoset& p) {
    std::vector<Int> values(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) values[i] = label_value(p, i);
    const Int top = lcm_of_set(values);
    std::map<Int, std::vector<Rat>> weights;  // prime -> weight per exponent >= 1
    for (const auto& [prime, emax] : factorize(top)) {
        std::vector<Rat> w(emax);
        for (unsigned e = 0; e < emax; ++e) w[e] = rng.nonzero_rational();
        weights[prime] = std::move(w);
    }
    const Rat scale = rng.nonzero_rational();
    PosetFunction f(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat v = scale;
        for (const auto& [prime, e] : factorize(values[i])) v *= weights[prime][e - 1];
        f.set(i, std::move(v));
    }
    return f;
}

PosetFunction random_semimult_boolean(Rng& rng, const FinitePoset& p) {
    std::vector<Rat> atom(8);
    for (auto& w : atom) w = rng.nonzero_rational();
    const Rat scale = rng.nonzero_rational();
    PosetFunction f(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        unsigned mask = static_cast<unsigned>(parse_integer(p.label(i).substr(1)).get_ui());
        Rat v = scale;
        for (unsigned b = 0; b < 8; ++b)
            if (mask & (1u << b)) v *= atom[b];
        f.set(i, std::move(v));
    }
    return f;
}

OrderedSubset random_subset(Rng& rng, const FinitePoset& p, std::size_t max_size) {
    const std::size_t want = 1 + rng.below(std::min(max_size, p.size()));
    std::vector<char> used(p.size(), 0);
    std::vector<std::size_t> picks;
    while (picks.size() < want) {
        std::size_t i = rng.below(p.size());
        if (!used[i]) {
            used[i] = 1;
            picks.push_back(i);
        }
    }
    return OrderedSubset::from_indices(p, std::move(picks));
}

struct CheckStats {
    const char* name;
    std::size_t ok = 0;
    std::size_t skipped = 0;
};

struct Failure {
    std::size_t trial;
    std::string check;
    std::string detail;
};

std::string dump_case(const FinitePoset& p, const OrderedSubset& x, const OrderedSubset& y,
                      const PosetFunction& f) {
    std::ostringstream out;
    out << "poset:\n" << poset_to_text(p);
    out << "X:";
    for (const auto& id : x.labels()) out << ' ' << id;
    out << "\nY:";
    for (const auto& id : y.labels()) out << ' ' << id;
    out << "\nf:\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        if (f.defined(i)) out << p.label(i) << ' ' << to_string(f.at(i)) << '\n';
    return out.str();
}

}  // namespace

Report run(const Options& opts) {
    Rng rng(opts.seed);
    enum Check {
        kFactorizeJoin,
        kFactorizeMeet,
        kDetVsOracle,
        kPsiCrossForms,
        kInverseVsOracle,
        kClosedSetForms,
        kCheckCount
    };
    CheckStats stats[kCheckCount] = {
        {"factorize-join"}, {"factorize-meet"},     {"det-vs-oracle"},
        {"psi-cross-forms"}, {"inverse-vs-oracle"}, {"closed-set-forms"},
    };
    std::vector<Failure> failures;
    std::size_t passed_trials = 0;

    for (std::size_t trial = 1; trial <= opts.trials; ++trial) {
        bool trial_ok = true;
        auto fail = [&](Check c, const std::string& detail) {
            trial_ok = false;
            if (failures.empty()) failures.push_back(Failure{trial, stats[c].name, detail});
        };

        const bool use_divisor = trial % 2 == 1;
        Int divisor_n(0);
        FinitePoset host = use_divisor ? random_divisor_host(rng, divisor_n) : random_boolean_host(rng);
        PosetFunction f_any = random_function(rng, host);
        PosetFunction f_semi =
            use_divisor ? random_semimult_divisor(rng, host) : random_semimult_boolean(rng, host);

        OrderedSubset x = random_subset(rng, host, 4);
        OrderedSubset y = random_subset(rng, host, 4);

        // Join factorization on possibly rectangular X, Y.
        {
            engine::MatrixSpec spec(engine::MatrixKind::join, x, y, f_any);
            auto fac = engine::factorize_join(spec);
            RatMatrix product =
                oracle::matmul(oracle::matmul(fac.ex, fac.lambda), fac.ey.transposed());
            if (product == engine::build_matrix(spec))
                ++stats[kFactorizeJoin].ok;
            else
                fail(kFactorizeJoin, dump_case(host, x, y, f_any));
        }

        // Meet factorization with a semimultiplicative nonzero f.
        {
            engine::MatrixSpec spec(engine::MatrixKind::meet, x, y, f_semi);
            auto fac = engine::factorize_meet(spec);
            RatMatrix product = oracle::matmul(
                oracle::matmul(oracle::matmul(oracle::matmul(fac.delta_x, fac.ex), fac.lambda),
                               fac.ey.transposed()),
                fac.delta_y);
            if (product == engine::build_matrix(spec))
                ++stats[kFactorizeMeet].ok;
            else
                fail(kFactorizeMeet, dump_case(host, x, y, f_semi));
        }

        // Square specs from here on: X and Y drawn independently, same size.
        auto draw_exact = [&](std::size_t want) {
            std::vector<char> used(host.size(), 0);
            std::vector<std::size_t> picks;
            while (picks.size() < want) {
                std::size_t i = rng.below(host.size());
                if (!used[i]) {
                    used[i] = 1;
                    picks.push_back(i);
                }
            }
            return OrderedSubset::from_indices(host, std::move(picks));
        };
        const std::size_t sz = 1 + rng.below(std::min<std::size_t>(4, host.size()));
        OrderedSubset xs = draw_exact(sz);
        OrderedSubset ys = draw_exact(sz);

        // Determinants against the oracle, join side with arbitrary f and
        // meet side with semimultiplicative f.
        {
            engine::MatrixSpec join_spec(engine::MatrixKind::join, xs, ys, f_any);
            Rat closed = engine::det_closed_form(join_spec, engine::DetMethod::cauchy_binet).value;
            if (closed == oracle::det(engine::build_matrix(join_spec)))
                ++stats[kDetVsOracle].ok;
            else
                fail(kDetVsOracle, dump_case(host, xs, ys, f_any));

            engine::MatrixSpec meet_spec(engine::MatrixKind::meet, xs, ys, f_semi);
            Rat meet_closed = engine::det_closed_form(meet_spec, engine::DetMethod::cauchy_binet).value;
            if (meet_closed == oracle::det(engine::build_matrix(meet_spec)))
                ++stats[kDetVsOracle].ok;
            else
                fail(kDetVsOracle, dump_case(host, xs, ys, f_semi));
        }

        // Mass-vector forms agree wherever their hypotheses hold.
        {
            OrderedSubset d = random_subset(rng, host, host.size());
            PsiVector rec = psi_recursive(d, f_any);
            PsiVector mob = psi_mobius(d, f_any);
            bool ok = rec.values == mob.values && psi_reconstructs(rec, f_any);

            OrderedSubset dj = join_closure(d);
            ok = ok && psi_join_closed(dj, f_any).values == psi_mobius(dj, f_any).values;
            ok = ok && psi_join_closed(dj, f_any, MobiusVariant::generated_sublattice).values ==
                           psi_mobius(dj, f_any).values;

            OrderedSubset du = upper_part(d);
            ok = ok && psi_upper_closed(du, f_any).values == psi_recursive(du, f_any).values;

            if (ok)
                ++stats[kPsiCrossForms].ok;
            else
                fail(kPsiCrossForms, dump_case(host, d, d, f_any));

            if (use_divisor) {
                // Dirichlet-convolution form on a multiple-closed carrier of
                // the full divisor lattice.
                FinitePoset full = divisor_poset(divisor_n);
                PosetFunction g = random_function(rng, full);
                std::vector<Int> picks;
                std::vector<Int> divs = divisors_of(divisor_n);
                const std::size_t count = 1 + rng.below(3);
                for (std::size_t i = 0; i < count; ++i) picks.push_back(divs[rng.below(divs.size())]);
                std::vector<Int> closed = multiple_closure(picks);
                std::vector<ElementId> ids;
                for (const Int& v : closed) ids.push_back(to_string(v));
                OrderedSubset dm = OrderedSubset::from_labels(full, ids);
                if (psi_dirichlet(dm, g).values == psi_recursive(dm, g).values)
                    ++stats[kPsiCrossForms].ok;
                else
                    fail(kPsiCrossForms, dump_case(full, dm, dm, g));
            }
        }

        // Two-set cofactor inverse against the oracle.
        {
            engine::MatrixSpec join_spec(engine::MatrixKind::join, xs, ys, f_any);
            RatMatrix m = engine::build_matrix(join_spec);
            if (oracle::det(m) == 0) {
                ++stats[kInverseVsOracle].skipped;
            } else {
                auto inv = engine::inverse_closed_form(join_spec, engine::InvMethod::cofactor_cb);
                bool ok = inv.inverse == oracle::inverse(m) &&
                          oracle::identity_check(oracle::matmul(inv.inverse, m));
                if (ok)
                    ++stats[kInverseVsOracle].ok;
                else
                    fail(kInverseVsOracle, dump_case(host, xs, ys, f_any));
            }

            engine::MatrixSpec meet_spec(engine::MatrixKind::meet, xs, ys, f_semi);
            RatMatrix mm = engine::build_matrix(meet_spec);
            if (oracle::det(mm) == 0) {
                ++stats[kInverseVsOracle].skipped;
            } else {
                auto inv = engine::inverse_closed_form(meet_spec, engine::InvMethod::cofactor_cb);
                if (inv.inverse == oracle::inverse(mm))
                    ++stats[kInverseVsOracle].ok;
                else
                    fail(kInverseVsOracle, dump_case(host, xs, ys, f_semi));
            }
        }

        // Closed-set determinant and inverse forms on S = the join closure
        // and on S = the upper part of a random subset.
        {
            OrderedSubset sj = join_closure(xs);
            OrderedSubset su = upper_part(xs);
            bool ok = true;
            for (int side = 0; side < 2; ++side) {
                const engine::MatrixKind kind =
                    side == 0 ? engine::MatrixKind::join : engine::MatrixKind::meet;
                const PosetFunction& f = side == 0 ? f_any : f_semi;

                engine::MatrixSpec spec_j(kind, sj, sj, f);
                Rat det_j = engine::det_closed_form(spec_j, engine::DetMethod::join_closed).value;
                ok = ok && det_j == oracle::det(engine::build_matrix(spec_j));
                if (det_j != 0) {
                    auto inv = engine::inverse_closed_form(spec_j, engine::InvMethod::join_closed);
                    ok = ok && inv.inverse == oracle::inverse(engine::build_matrix(spec_j));
                }

                engine::MatrixSpec spec_u(kind, su, su, f);
                Rat det_u = engine::det_closed_form(spec_u, engine::DetMethod::upper_closed).value;
                ok = ok && det_u == oracle::det(engine::build_matrix(spec_u));
                if (det_u != 0) {
                    auto inv = engine::inverse_closed_form(spec_u, engine::InvMethod::upper_closed);
                    ok = ok && inv.inverse == oracle::inverse(engine::build_matrix(spec_u));
                }
            }
            if (ok)
                ++stats[kClosedSetForms].ok;
            else
                fail(kClosedSetForms, dump_case(host, sj, su, f_any));
        }

        if (trial_ok) ++passed_trials;
    }

    std::ostringstream out;
    out << "verify: trials=" << opts.trials << " seed=" << opts.seed << "\n";
    for (const auto& s : stats) {
        out << s.name << ": " << s.ok << " ok";
        if (s.skipped) out << " (" << s.skipped << " skipped)";
        out << "\n";
    }
    if (!failures.empty()) {
        const Failure& f = failures.front();
        out << "FAIL trial " << f.trial << " check " << f.check << "\n" << f.detail;
    }
    out << passed_trials << "/" << opts.trials << " pass\n";

    Report report;
    report.text = out.str();
    report.all_pass = passed_trials == opts.trials;
    return report;
}

}  // namespace latmat::verify
