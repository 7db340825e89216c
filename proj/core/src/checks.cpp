#include "iforms/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "iforms/calculus.hpp"
#include "iforms/error.hpp"
#include "iforms/render.hpp"

namespace iforms {

namespace gen {

namespace {

int uniform(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Rational random_rational(Rng& rng) {
    int num = uniform(rng, -3, 3);
    if (num == 0) num = 1;
    int den = uniform(rng, 1, 2);
    return Rational(num, den);
}

Poly random_poly(Rng& rng, const Space& space, int max_degree, int max_terms) {
    Poly f(space);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(space.dim(), 0);
        const int degree = uniform(rng, 0, max_degree);
        for (int d = 0; d < degree; ++d)
            exps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.dim()) - 1))] += 1;
        f.add_term(std::move(exps), random_rational(rng));
    }
    return f;
}

VectorField random_vector_field(Rng& rng, const Space& space) {
    std::vector<Poly> comps;
    for (std::size_t mu = 0; mu < space.dim(); ++mu) {
        if (uniform(rng, 0, 3) == 0)
            comps.push_back(Poly(space));
        else
            comps.push_back(random_poly(rng, space, 2, 2));
    }
    return VectorField(space, std::move(comps));
}

SmoothMap random_map(Rng& rng, const Space& source, const Space& target) {
    std::vector<Poly> comps;
    for (std::size_t a = 0; a < target.dim(); ++a) comps.push_back(random_poly(rng, source, 2, 2));
    return SmoothMap(source, target, std::move(comps));
}

Generator random_generator(Rng& rng, const Space& space, int max_slot) {
    const int size = max_slot >= 2 && uniform(rng, 0, 2) == 0 ? 2 : 1;
    std::vector<int> slots;
    while (static_cast<int>(slots.size()) < size) {
        int k = uniform(rng, 1, max_slot);
        if (std::find(slots.begin(), slots.end(), k) == slots.end()) slots.push_back(k);
    }
    return Generator{IndexSet(std::move(slots)),
                     static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.dim()) - 1))};
}

Form random_form(Rng& rng, const Space& space, int max_slot, int max_factors, int max_terms) {
    Form w(space);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<Generator> gens;
        const int count = uniform(rng, 0, max_factors);
        for (int i = 0; i < count; ++i) gens.push_back(random_generator(rng, space, max_slot));
        w.add_raw(random_poly(rng, space, 2, 2), std::move(gens));
    }
    return w;
}

Form random_lambda1_form(Rng& rng, const Space& space) {
    Form w(space);
    const int terms = uniform(rng, 1, 2);
    for (int t = 0; t < terms; ++t) {
        std::vector<Generator> gens;
        const int count = uniform(rng, 0, 2);
        for (int i = 0; i < count; ++i)
            gens.push_back(Generator{
                IndexSet{1},
                static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.dim()) - 1))});
        w.add_raw(random_poly(rng, space, 2, 2), std::move(gens));
    }
    return w;
}

CovariantTensor random_tensor(Rng& rng, const Space& space, std::size_t order) {
    CovariantTensor t(space, order);
    const int entries = uniform(rng, 1, 3);
    for (int e = 0; e < entries; ++e) {
        CovariantTensor::IndexTuple idx;
        for (std::size_t i = 0; i < order; ++i)
            idx.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.dim()) - 1)));
        t.set_component(std::move(idx), random_poly(rng, space, 2, 2));
    }
    return t;
}

}  // namespace gen

namespace {

using gen::Rng;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Space plane() { return Space({"x", "y"}); }

/// Runs `cases` draws of one identity with its own deterministic substream.
struct Runner {
    std::vector<CheckResult>& out;
    std::string suite;
    std::uint64_t seed;
    int cases;

    void identity(const std::string& name,
                  const std::function<std::optional<std::string>(Rng&)>& one_case) const {
        Rng rng(seed ^ fnv1a(suite + "/" + name));
        CheckResult r{suite, name, cases, true, ""};
        for (int i = 0; i < cases; ++i) {
            auto counterexample = one_case(rng);
            if (counterexample) {
                r.passed = false;
                r.cases = i + 1;
                r.counterexample = *counterexample;
                break;
            }
        }
        out.push_back(std::move(r));
    }
};

std::optional<std::string> pass() { return std::nullopt; }

std::optional<std::string> failed(const std::string& what, const Form& w) {
    return what + ": " + to_text(w);
}

const std::vector<std::vector<std::vector<int>>>& s3_cycles() {
    static const std::vector<std::vector<std::vector<int>>> all = {
        {}, {{1, 2}}, {{1, 3}}, {{2, 3}}, {{1, 2, 3}}, {{1, 3, 2}}};
    return all;
}

void commutation_suite(const Runner& run) {
    const Space space = plane();
    run.identity("d_k^2 = 0", [&](Rng& rng) {
        const int k = 1 + static_cast<int>(rng() % 4);
        Form w = gen::random_form(rng, space, 4, 3);
        Form r = d(k, d(k, w));
        if (!r.is_zero()) return failed("d_k d_k omega", w);
        return pass();
    });
    run.identity("[d_i, d_j] = 0", [&](Rng& rng) {
        const int i = 1 + static_cast<int>(rng() % 4);
        const int j = 1 + static_cast<int>(rng() % 4);
        Form w = gen::random_form(rng, space, 4, 3);
        Form r = graded_commutator(exterior_d(space, i), exterior_d(space, j))(w);
        if (!r.is_zero()) return failed("[d_i,d_j] omega", w);
        return pass();
    });
    run.identity("graded commutativity", [&](Rng& rng) {
        // homogeneous pieces of random forms
        Form a = gen::random_form(rng, space, 3, 3, 1);
        Form b = gen::random_form(rng, space, 3, 3, 1);
        for (const auto& [da, pa] : a.multidegree_components())
            for (const auto& [db, pb] : b.multidegree_components()) {
                Form lhs = pa.wedge(pb);
                Form rhs = pb.wedge(pa);
                if (parity_pairing(da, db)) rhs = -rhs;
                if (lhs != rhs) return failed("a^b vs (-1)^<a,b> b^a", pa.wedge(pb));
            }
        return pass();
    });
    auto eq1_case = [&](Rng& rng, auto&& body) -> std::optional<std::string> {
        VectorField x = gen::random_vector_field(rng, space);
        VectorField y = gen::random_vector_field(rng, space);
        Form w = gen::random_lambda1_form(rng, space);
        return body(x, y, w);
    };
    run.identity("[i_X, i_Y] = 0", [&](Rng& rng) {
        return eq1_case(rng, [&](const auto& x, const auto& y, const Form& w) {
            Form r = graded_commutator(insertion(x, 1), insertion(y, 1))(w);
            if (!r.is_zero()) return failed("[i_X,i_Y] omega", w);
            return pass();
        });
    });
    run.identity("[L_X, d_1] = 0", [&](Rng& rng) {
        return eq1_case(rng, [&](const auto& x, const auto&, const Form& w) {
            Form r = graded_commutator(lie_derivation(x), exterior_d(space, 1))(w);
            if (!r.is_zero()) return failed("[L_X,d] omega", w);
            return pass();
        });
    });
    run.identity("[i_X, L_Y] = i_[X,Y]", [&](Rng& rng) {
        return eq1_case(rng, [&](const auto& x, const auto& y, const Form& w) {
            Form lhs = graded_commutator(insertion(x, 1), lie_derivation(y))(w);
            Form rhs = insert(bracket(x, y), 1, w);
            if (lhs != rhs) return failed("[i_X,L_Y] omega", w);
            return pass();
        });
    });
    run.identity("[L_X, L_Y] = L_[X,Y]", [&](Rng& rng) {
        return eq1_case(rng, [&](const auto& x, const auto& y, const Form& w) {
            Form lhs = graded_commutator(lie_derivation(x), lie_derivation(y))(w);
            Form rhs = lie(bracket(x, y), w);
            if (lhs != rhs) return failed("[L_X,L_Y] omega", w);
            return pass();
        });
    });
}

void partition_suite(const Runner& run) {
    const Space space = plane();
    // all nonempty K within slots {1..4} with |K| <= 3
    std::vector<IndexSet> ks;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> slots;
        for (int k = 1; k <= 4; ++k)
            if (mask & (1 << (k - 1))) slots.push_back(k);
        if (slots.size() <= 3) ks.push_back(IndexSet(std::move(slots)));
    }
    run.identity("d_partition(K,f) = d_iterated(K,f)", [&](Rng& rng) {
        const IndexSet& K = ks[rng() % ks.size()];
        Poly f = gen::random_poly(rng, space, 3, 3);
        Form lhs = d_partition(K, f);
        Form rhs = d_iterated(K, f);
        if (lhs != rhs) return failed("d_partition vs d_iterated, f", Form::from_poly(f));
        return pass();
    });
    run.identity("d_iterated order independence", [&](Rng& rng) {
        const IndexSet& K = ks[rng() % ks.size()];
        Poly f = gen::random_poly(rng, space, 3, 3);
        std::vector<int> order = K.elements();
        std::shuffle(order.begin(), order.end(), rng);
        Form shuffled = Form::from_poly(f);
        for (int k : order) shuffled = d(k, shuffled);
        if (shuffled != d_iterated(K, f))
            return failed("application order changed d_K f, f", Form::from_poly(f));
        return pass();
    });
}

void kappa_suite(const Runner& run) {
    const Space space = plane();
    const SlotMap swap12 = SlotMap::transposition(1, 2);
    run.identity("kappa_(12) display formula", [&](Rng& rng) {
        const int p = static_cast<int>(rng() % 3);
        const int q = static_cast<int>(rng() % 3);
        const int r = static_cast<int>(rng() % 2);
        if (p + q + r == 0) return pass();
        std::vector<Poly> gs, hs, ls;
        for (int i = 0; i < p; ++i) gs.push_back(gen::random_poly(rng, space, 2, 2));
        for (int i = 0; i < q; ++i) hs.push_back(gen::random_poly(rng, space, 2, 2));
        for (int i = 0; i < r; ++i) ls.push_back(gen::random_poly(rng, space, 2, 2));
        auto build = [&](int first_slot, int second_slot) {
            Form w = Form::unit(space);
            for (const auto& g : gs) w = w.wedge(d_iterated(IndexSet{first_slot}, g));
            for (const auto& h : hs) w = w.wedge(d_iterated(IndexSet{second_slot}, h));
            for (const auto& l : ls) w = w.wedge(d_iterated(IndexSet{1, 2}, l));
            return w;
        };
        Form lhs = kappa(swap12, build(1, 2));
        Form rhs = build(2, 1);
        if (lhs != rhs) return failed("kappa_(12) display mismatch on", build(1, 2));
        return pass();
    });
    run.identity("kappa_(12) is an involution", [&](Rng& rng) {
        Form w = gen::random_form(rng, space, 2, 3);
        if (kappa(swap12, kappa(swap12, w)) != w) return failed("kappa^2 omega != omega", w);
        return pass();
    });
    run.identity("kappa_sigma d_k = d_sigma(k) kappa_sigma (S_3)", [&](Rng& rng) {
        const auto& cycles = s3_cycles()[rng() % s3_cycles().size()];
        const SlotMap sigma = SlotMap::from_cycles(cycles);
        const int k = 1 + static_cast<int>(rng() % 3);
        Form w = gen::random_form(rng, space, 3, 3);
        if (kappa(sigma, d(k, w)) != d(sigma(k), kappa(sigma, w)))
            return failed("kappa does not intertwine d on", w);
        return pass();
    });
    run.identity("kappa_sigma kappa_tau = kappa_(sigma tau)", [&](Rng& rng) {
        const SlotMap sigma = SlotMap::from_cycles(s3_cycles()[rng() % s3_cycles().size()]);
        const SlotMap tau = SlotMap::from_cycles(s3_cycles()[rng() % s3_cycles().size()]);
        Form w = gen::random_form(rng, space, 3, 3);
        if (kappa(sigma, kappa(tau, w)) != kappa(tau.then(sigma), w))
            return failed("kappa composition mismatch on", w);
        return pass();
    });
}

void homotopy_suite(const Runner& run) {
    const Space space = plane();
    run.identity("[H2, d2] = id - iota.pi", [&](Rng& rng) {
        Form w = gen::random_form(rng, space, 2, 3);
        // H2 has degree -e2, so <deg H2, deg d2> = 1 and the graded
        // commutator is H2 d2 + d2 H2.
        Form lhs = homotopy_h2(d(2, w)) + d(2, homotopy_h2(w));
        Form rhs = w - include_lambda01(project_lambda01(w));
        if (lhs != rhs) return failed("homotopy identity fails on", w);
        return pass();
    });
    run.identity("pi . iota = id on Lambda_2^(0,*)", [&](Rng& rng) {
        Form w = project_lambda01(gen::random_form(rng, space, 2, 3));
        if (project_lambda01(include_lambda01(w)) != w) return failed("pi iota omega != omega", w);
        return pass();
    });
    run.identity("d2-closed, pi = 0 implies omega = d2(H2 omega)", [&](Rng& rng) {
        Form eta = gen::random_form(rng, space, 2, 3);
        eta = eta - project_lambda01(eta);  // slot-1 degree >= 1 part
        Form w = d(2, eta);
        if (!d(2, w).is_zero() || !project_lambda01(w).is_zero())
            return failed("construction broke closedness on", eta);
        if (w != d(2, homotopy_h2(w))) return failed("exactness witness fails on", w);
        return pass();
    });
    run.identity("slot relabeling intertwines d2 with d1", [&](Rng& rng) {
        Form w = project_lambda01(gen::random_form(rng, space, 2, 3));
        if (lambda01_to_lambda1(d(2, w)) != d(1, lambda01_to_lambda1(w)))
            return failed("relabel . d2 != d1 . relabel on", w);
        return pass();
    });
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t p) {
    std::vector<std::size_t> base(p);
    for (std::size_t i = 0; i < p; ++i) base[i] = i + 1;
    std::vector<std::vector<std::size_t>> all;
    do {
        all.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return all;
}

/// Searches for a concrete failure of A-linearity of the evaluation map of w:
/// a slot i, fields X_1..X_p and f in A with
/// eval(..., f X_i, ...) != f eval(..., X_i, ...).
bool find_multilinearity_violation(const Form& w, std::size_t p, Rng& rng) {
    const Space& space = w.space();
    std::vector<VectorField> candidates;
    for (std::size_t mu = 0; mu < space.dim(); ++mu)
        candidates.push_back(VectorField::coordinate(space, mu));
    for (int extra = 0; extra < 2; ++extra)
        candidates.push_back(gen::random_vector_field(rng, space));
    std::vector<Poly> scalars;
    for (std::size_t mu = 0; mu < space.dim(); ++mu)
        scalars.push_back(Poly::coordinate(space, mu));
    scalars.push_back(gen::random_poly(rng, space, 2, 2));

    std::vector<std::size_t> pick(p, 0);
    while (true) {
        std::vector<VectorField> fields;
        for (std::size_t i = 0; i < p; ++i) fields.push_back(candidates[pick[i]]);
        Poly base = evaluate_insertion(w, fields);
        for (std::size_t i = 0; i < p; ++i)
            for (const Poly& f : scalars) {
                std::vector<VectorField> scaled = fields;
                scaled[i] = fields[i].scaled_by(f);
                if (evaluate_insertion(w, scaled) != f * base) return true;
            }
        std::size_t i = 0;
        while (i < p && ++pick[i] == candidates.size()) pick[i++] = 0;
        if (i == p) break;
    }
    return false;
}

Form random_obstruction(Rng& rng, const Space& space, std::size_t p) {
    // a multidegree-(1,..,1) monomial containing a block of size >= 2
    std::vector<int> slots(p);
    for (std::size_t i = 0; i < p; ++i) slots[i] = static_cast<int>(i) + 1;
    std::shuffle(slots.begin(), slots.end(), rng);
    const std::size_t block = 2 + (p > 2 ? rng() % (p - 1) : 0);  // 2..p
    std::vector<Generator> gens;
    gens.push_back(Generator{
        IndexSet(std::vector<int>(slots.begin(), slots.begin() + block)),
        static_cast<std::size_t>(rng() % space.dim())});
    for (std::size_t i = block; i < p; ++i)
        gens.push_back(Generator{IndexSet{slots[i]},
                                 static_cast<std::size_t>(rng() % space.dim())});
    Form w(space);
    w.add_raw(gen::random_poly(rng, space, 2, 2), std::move(gens));
    return w;
}

void tensor_suite(const Runner& run) {
    const Space space = plane();
    run.identity("extract . embed = id", [&](Rng& rng) {
        const std::size_t p = rng() % 4;  // 0..3
        CovariantTensor t = gen::random_tensor(rng, space, p);
        if (extract(embed(t), p) != t) return failed("roundtrip failed, embed(T) =", embed(t));
        return pass();
    });
    run.identity("insertion evaluation = component contraction", [&](Rng& rng) {
        const std::size_t p = 1 + rng() % 3;
        CovariantTensor t = gen::random_tensor(rng, space, p);
        std::vector<VectorField> fields;
        for (std::size_t i = 0; i < p; ++i) fields.push_back(gen::random_vector_field(rng, space));
        if (evaluate_insertion(embed(t), fields) != evaluate_components(t, fields))
            return failed("evaluation route mismatch, embed(T) =", embed(t));
        return pass();
    });
    run.identity("embed . permute(sigma) = kappa_sigma . embed", [&](Rng& rng) {
        const std::size_t p = 1 + rng() % 3;
        CovariantTensor t = gen::random_tensor(rng, space, p);
        for (const auto& sigma : permutations_of(p)) {
            std::vector<int> image(sigma.begin(), sigma.end());
            Form lhs = embed(permute(sigma, t));
            Form rhs = kappa(SlotMap::from_permutation(image), embed(t));
            if (lhs != rhs) return failed("equivariance mismatch, embed(T) =", embed(t));
        }
        return pass();
    });
    run.identity("embed . lie_tensor = lie . embed", [&](Rng& rng) {
        const std::size_t p = rng() % 4;
        CovariantTensor t = gen::random_tensor(rng, space, p);
        VectorField x = gen::random_vector_field(rng, space);
        if (embed(lie_tensor(x, t)) != lie(x, embed(t)))
            return failed("Lie compatibility mismatch, embed(T) =", embed(t));
        return pass();
    });
    run.identity("is_tensor classification + multilinearity", [&](Rng& rng) {
        const std::size_t p = 2 + rng() % 2;
        CovariantTensor t = gen::random_tensor(rng, space, p);
        const bool obstructed = rng() % 2 == 0;
        Form w = embed(t);
        Form obstruction(space);
        if (obstructed) {
            obstruction = random_obstruction(rng, space, p);
            if (obstruction.is_zero()) return pass();
            w += obstruction;
        }
        TensorCheck check = is_tensor(w, p);
        if (obstructed) {
            if (check.tensor) return failed("obstructed form accepted:", w);
            if (check.obstruction != obstruction) return failed("wrong obstruction for", w);
            if (!find_multilinearity_violation(w, p, rng))
                return failed("no A-linearity violation found for", w);
        } else {
            if (!check.tensor || *check.tensor != t) return failed("tensor rejected:", w);
            // accepted forms evaluate A-linearly; spot-check one scaling
            std::vector<VectorField> fields;
            for (std::size_t i = 0; i < p; ++i)
                fields.push_back(gen::random_vector_field(rng, space));
            Poly f = gen::random_poly(rng, space, 2, 2);
            std::size_t slot = rng() % p;
            Poly base = evaluate_insertion(w, fields);
            std::vector<VectorField> scaled = fields;
            scaled[slot] = fields[slot].scaled_by(f);
            if (evaluate_insertion(w, scaled) != f * base)
                return failed("accepted form is not multilinear:", w);
        }
        return pass();
    });
    run.identity("insert_slot matches componentwise contraction", [&](Rng& rng) {
        const std::size_t p = 2 + rng() % 2;
        CovariantTensor t = gen::random_tensor(rng, space, p);
        VectorField x = gen::random_vector_field(rng, space);
        const int slot = 1 + static_cast<int>(rng() % p);
        CovariantTensor got = extract(insert_slot(embed(t), x, slot, p), p - 1);
        CovariantTensor expected(space, p - 1);
        std::vector<std::size_t> idx(p - 1, 0);
        while (true) {
            Poly v(space);
            for (std::size_t nu = 0; nu < space.dim(); ++nu) {
                CovariantTensor::IndexTuple full = idx;
                full.insert(full.begin() + (slot - 1), nu);
                v = v + t.component(full) * x.component(nu);
            }
            expected.set_component(idx, v);
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == space.dim()) idx[i++] = 0;
            if (i == idx.size() || idx.empty()) break;
        }
        if (got != expected) return failed("insert_slot mismatch, embed(T) =", embed(t));
        return pass();
    });
    run.identity("embed(T1 x T2) = embed(T1) ^ shifted embed(T2)", [&](Rng& rng) {
        const std::size_t p = 1 + rng() % 2;
        const std::size_t q = 1 + rng() % 2;
        CovariantTensor t1 = gen::random_tensor(rng, space, p);
        CovariantTensor t2 = gen::random_tensor(rng, space, q);
        Form lhs = embed(tensor_product(t1, t2));
        Form rhs = embed(t1).wedge(kappa(SlotMap::shift_up(static_cast<int>(p)), embed(t2)));
        if (lhs != rhs) return failed("tensor product embedding mismatch on", lhs);
        return pass();
    });
    run.identity("antisymmetrization of embed (p = 2)", [&](Rng& rng) {
        CovariantTensor t = gen::random_tensor(rng, space, 2);
        Form lhs = (embed(t) - kappa(SlotMap::transposition(1, 2), embed(t)))
                       .scaled(Rational(1, 2));
        CovariantTensor anti(space, 2);
        for (std::size_t mu = 0; mu < space.dim(); ++mu)
            for (std::size_t nu = 0; nu < space.dim(); ++nu)
                anti.set_component({mu, nu},
                                   (t.component({mu, nu}) - t.component({nu, mu})).scaled(Rational(1, 2)));
        if (lhs != embed(anti)) return failed("antisymmetric part mismatch, embed(T) =", embed(t));
        return pass();
    });
}

void pullback_suite(const Runner& run) {
    const Space m({"u", "v"});
    const Space n = plane();
    const Space p({"s", "t"});
    run.identity("pullback . d_k = d_k . pullback", [&](Rng& rng) {
        SmoothMap phi = gen::random_map(rng, m, n);
        Form w = gen::random_form(rng, n, 3, 3);
        const int k = 1 + static_cast<int>(rng() % 3);
        if (pullback(phi, d(k, w)) != d(k, pullback(phi, w)))
            return failed("pullback does not commute with d on", w);
        return pass();
    });
    run.identity("(psi . phi)* = phi* . psi*", [&](Rng& rng) {
        SmoothMap phi = gen::random_map(rng, m, n);
        SmoothMap psi = gen::random_map(rng, n, p);
        Form w = gen::random_form(rng, p, 2, 3);
        if (pullback(compose(psi, phi), w) != pullback(phi, pullback(psi, w)))
            return failed("composite pullback mismatch on", w);
        return pass();
    });
    run.identity("substitute is a ring homomorphism", [&](Rng& rng) {
        SmoothMap phi = gen::random_map(rng, m, n);
        Poly f = gen::random_poly(rng, n, 3, 3);
        Poly g = gen::random_poly(rng, n, 3, 3);
        if (substitute(f * g, phi) != substitute(f, phi) * substitute(g, phi))
            return failed("(fg) . phi != (f.phi)(g.phi), f =", Form::from_poly(f));
        return pass();
    });
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed, int cases) {
    if (cases < 1) throw Error("case count must be positive");
    std::vector<CheckResult> out;
    bool known = false;
    auto want = [&](const char* name) {
        bool match = suite == name || suite == "all";
        known = known || suite == name;
        return match;
    };
    if (want("commutation")) commutation_suite({out, "commutation", seed, cases});
    if (want("partition")) partition_suite({out, "partition", seed, cases});
    if (want("kappa")) kappa_suite({out, "kappa", seed, cases});
    if (want("homotopy")) homotopy_suite({out, "homotopy", seed, cases});
    if (want("tensor")) tensor_suite({out, "tensor", seed, cases});
    if (want("pullback")) pullback_suite({out, "pullback", seed, cases});
    if (!known && suite != "all") throw Error("unknown suite: " + suite);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace iforms
