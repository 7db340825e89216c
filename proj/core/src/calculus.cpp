#include "iforms/calculus.hpp"

#include <algorithm>

#include "iforms/error.hpp"

namespace iforms {

GradedDerivation exterior_d(const Space& space, int slot) {
    if (slot < 1) throw Error("differential slots start at 1");
    return GradedDerivation(
        MultiDegree::basis(slot),
        [space, slot](const Poly& f) {
            Form r(space);
            for (std::size_t mu = 0; mu < space.dim(); ++mu)
                r += Form::monomial(f.partial(mu), {Generator{IndexSet{slot}, mu}});
            return r;
        },
        [space, slot](const Generator& g) {
            if (g.slots.contains(slot)) return Form(space);  // d_k d_k = 0
            return Form::from_generator(space, Generator{g.slots.with(slot), g.coord});
        });
}

Form d(int slot, const Form& w) { return exterior_d(w.space(), slot)(w); }

Form d_iterated(const IndexSet& K, const Poly& f) { return d_iterated(K, Form::from_poly(f)); }

Form d_iterated(const IndexSet& K, const Form& w) {
    Form r = w;
    // d_K = d_{k1} ... d_{kr}, innermost (largest) first; order is immaterial
    // since the d's commute, which the test suite verifies independently.
    const auto& slots = K.elements();
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) r = d(*it, r);
    return r;
}

namespace {

// All unordered set partitions of `items`, blocks ordered by least element.
void enumerate_partitions(const std::vector<int>& items, std::size_t next,
                          std::vector<std::vector<int>>& blocks,
                          const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (next == items.size()) {
        emit(blocks);
        return;
    }
    // index-based: the recursive calls grow `blocks`, which may reallocate
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(items[next]);
        enumerate_partitions(items, next + 1, blocks, emit);
        blocks[b].pop_back();
    }
    blocks.push_back({items[next]});
    enumerate_partitions(items, next + 1, blocks, emit);
    blocks.pop_back();
}

}  // namespace

Form d_partition(const IndexSet& K, const Poly& f) {
    if (K.empty()) throw Error("d_partition requires a nonempty index set");
    const Space& space = f.space();
    Form out(space);
    std::vector<std::vector<int>> blocks;
    enumerate_partitions(K.elements(), 0, blocks, [&](const std::vector<std::vector<int>>& part) {
        const std::size_t l = part.size();
        // all coordinate tuples (mu_1, ..., mu_l)
        std::vector<std::size_t> mu(l, 0);
        while (true) {
            Poly coeff = f;
            for (std::size_t i = 0; i < l && !coeff.is_zero(); ++i) coeff = coeff.partial(mu[i]);
            if (!coeff.is_zero()) {
                std::vector<Generator> gens;
                gens.reserve(l);
                for (std::size_t i = 0; i < l; ++i)
                    gens.push_back(Generator{IndexSet(part[i]), mu[i]});
                out.add_raw(coeff, std::move(gens));
            }
            std::size_t i = 0;
            while (i < l && ++mu[i] == space.dim()) mu[i++] = 0;
            if (i == l) break;
        }
    });
    return out;
}

SlotMap SlotMap::transposition(int i, int j) {
    SlotMap m;
    m.fn_ = [i, j](int k) { return k == i ? j : (k == j ? i : k); };
    return m;
}

SlotMap SlotMap::from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::map<int, int> table;
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || to < 1) throw Error("differential slots start at 1");
            if (!table.emplace(from, to).second) throw Error("slot repeated across cycles");
        }
    }
    SlotMap m;
    m.fn_ = [table](int k) {
        auto it = table.find(k);
        return it == table.end() ? k : it->second;
    };
    return m;
}

SlotMap SlotMap::from_permutation(const std::vector<int>& image_of) {
    std::map<int, int> table;
    for (std::size_t i = 0; i < image_of.size(); ++i) {
        if (image_of[i] < 1) throw Error("differential slots start at 1");
        if (!table.emplace(static_cast<int>(i) + 1, image_of[i]).second)
            throw Error("slot repeated in permutation");
    }
    SlotMap m;
    m.fn_ = [table](int k) {
        auto it = table.find(k);
        return it == table.end() ? k : it->second;
    };
    return m;
}

SlotMap SlotMap::shift_up(int amount) {
    if (amount < 0) throw Error("shift amount must be nonnegative");
    SlotMap m;
    m.fn_ = [amount](int k) { return k + amount; };
    return m;
}

SlotMap SlotMap::shift_down_above(int removed) {
    SlotMap m;
    m.fn_ = [removed](int k) {
        if (k == removed) throw Error("slot shift applied to the removed slot");
        return k > removed ? k - 1 : k;
    };
    return m;
}

int SlotMap::operator()(int slot) const { return fn_ ? fn_(slot) : slot; }

IndexSet SlotMap::operator()(const IndexSet& K) const {
    std::vector<int> mapped;
    mapped.reserve(K.size());
    for (int k : K) mapped.push_back((*this)(k));
    IndexSet image(std::move(mapped));
    if (image.size() != K.size()) throw Error("slot map is not injective on the index set");
    return image;
}

SlotMap SlotMap::then(const SlotMap& next) const {
    SlotMap m;
    SlotMap first = *this, second = next;
    m.fn_ = [first, second](int k) { return second(first(k)); };
    return m;
}

Form kappa(const SlotMap& sigma, const Form& w) {
    Form out(w.space());
    for (const auto& [factors, coeff] : w.terms()) {
        std::vector<Generator> gens;
        for (const auto& [g, e] : factors)
            for (int i = 0; i < e; ++i) gens.push_back(Generator{sigma(g.slots), g.coord});
        out.add_raw(coeff, std::move(gens));
    }
    return out;
}

GradedDerivation lie_derivation(const VectorField& x) {
    const Space space = x.space();
    return GradedDerivation(
        MultiDegree{},
        [x, space](const Poly& f) { return Form::from_poly(x.apply(f)); },
        [x](const Generator& g) { return d_iterated(g.slots, x.component(g.coord)); });
}

Form lie(const VectorField& x, const Form& w) {
    if (x.space() != w.space()) throw Error("vector field / form space mismatch");
    return lie_derivation(x)(w);
}

GradedDerivation insertion(const VectorField& x, int slot) {
    if (slot < 1) throw Error("differential slots start at 1");
    const Space space = x.space();
    return GradedDerivation(
        -MultiDegree::basis(slot),
        [space](const Poly&) { return Form(space); },
        [x, space, slot](const Generator& g) {
            if (!g.slots.contains(slot)) return Form(space);
            return d_iterated(g.slots.without(slot), x.component(g.coord));
        });
}

Form insert(const VectorField& x, int slot, const Form& w) {
    if (x.space() != w.space()) throw Error("vector field / form space mismatch");
    return insertion(x, slot)(w);
}

GradedDerivation insertion_c(const Space& space) {
    // The generator rule d_{12}x -> d_1 x shifts every multidegree by -e2, so
    // that is the derivation's degree; the pairing <-e2, e1> = 0 lets i_C pass
    // slot-1 generators freely, which is what makes [i_C, d_2] act on a
    // monomial as multiplication by its slot-1 degree.
    return GradedDerivation(
        -MultiDegree::basis(2),
        [space](const Poly&) { return Form(space); },
        [space](const Generator& g) {
            if (g.slots == IndexSet{1, 2})
                return Form::from_generator(space, Generator{IndexSet{1}, g.coord});
            return Form(space);  // C kills coordinates, so d_2 x and d_1 x go to 0
        });
}

namespace {

void require_lambda2(const Form& w, const char* what) {
    if (w.max_slot() > 2) throw Error(std::string(what) + " is only defined on Lambda_2");
}

}  // namespace

Form insertion_c(const Form& w) {
    require_lambda2(w, "i_C^{(2)}");
    return insertion_c(w.space())(w);
}

Form homotopy_h2(const Form& w) {
    require_lambda2(w, "H_2");
    const GradedDerivation ic = insertion_c(w.space());
    Form out(w.space());
    for (const auto& [deg, piece] : w.multidegree_components()) {
        const int s = deg.at(1);
        if (s != 0) out += ic(piece).scaled(Rational(1) / s);
    }
    return out;
}

Form project_lambda01(const Form& w) {
    require_lambda2(w, "pi");
    Form out(w.space());
    for (const auto& [deg, piece] : w.multidegree_components())
        if (deg.at(1) == 0) out += piece;
    return out;
}

Form include_lambda01(const Form& w) {
    require_lambda2(w, "iota");
    for (const auto& [deg, piece] : w.multidegree_components())
        if (deg.at(1) != 0) throw Error("iota expects a form of slot-1 degree zero");
    return w;
}

Form lambda01_to_lambda1(const Form& w) {
    require_lambda2(w, "slot relabeling");
    Form out(w.space());
    for (const auto& [factors, coeff] : w.terms()) {
        std::vector<Generator> gens;
        for (const auto& [g, e] : factors) {
            if (g.slots != IndexSet{2})
                throw Error("relabeling expects generators of slot-1 degree zero");
            for (int i = 0; i < e; ++i) gens.push_back(Generator{IndexSet{1}, g.coord});
        }
        out.add_raw(coeff, std::move(gens));
    }
    return out;
}

Form pullback(const SmoothMap& phi, const Form& w) {
    if (w.space() != phi.target()) throw Error("pullback: form not over the map target");
    Form out(phi.source());
    for (const auto& [factors, coeff] : w.terms()) {
        Form term = Form::from_poly(substitute(coeff, phi));
        for (const auto& [g, e] : factors) {
            Form pg = d_iterated(g.slots, phi.component(g.coord));
            for (int i = 0; i < e && !term.is_zero(); ++i) term = term.wedge(pg);
        }
        out += term;
    }
    return out;
}

}  // namespace iforms
