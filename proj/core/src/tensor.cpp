#include "iforms/tensor.hpp"

#include "iforms/error.hpp"

namespace iforms {

CovariantTensor::CovariantTensor(Space space, std::size_t order)
    : space_(std::move(space)), order_(order) {}

CovariantTensor CovariantTensor::scalar(Poly f) {
    CovariantTensor t(f.space(), 0);
    t.set_component({}, std::move(f));
    return t;
}

Poly CovariantTensor::component(const IndexTuple& idx) const {
    if (idx.size() != order_) throw Error("tensor index tuple length mismatch");
    auto it = components_.find(idx);
    return it == components_.end() ? Poly(space_) : it->second;
}

void CovariantTensor::set_component(IndexTuple idx, Poly value) {
    if (idx.size() != order_) throw Error("tensor index tuple length mismatch");
    for (std::size_t i : idx)
        if (i >= space_.dim()) throw Error("tensor index out of range");
    if (value.space() != space_) throw Error("tensor component over wrong space");
    if (value.is_zero())
        components_.erase(idx);
    else
        components_.insert_or_assign(std::move(idx), std::move(value));
}

Form embed(const CovariantTensor& t) {
    Form out(t.space());
    for (const auto& [idx, coeff] : t.components()) {
        std::vector<Generator> gens;
        gens.reserve(t.order());
        for (std::size_t i = 0; i < idx.size(); ++i)
            gens.push_back(Generator{IndexSet{static_cast<int>(i) + 1}, idx[i]});
        out.add_raw(coeff, std::move(gens));
    }
    return out;
}

namespace {

MultiDegree ones_degree(std::size_t p) {
    MultiDegree d;
    for (std::size_t i = 1; i <= p; ++i) d.add(static_cast<int>(i), 1);
    return d;
}

void require_ones_degree(const Form& w, std::size_t p) {
    const MultiDegree expected = ones_degree(p);
    for (const auto& [factors, coeff] : w.terms())
        if (Form::factor_degree(factors) != expected)
            throw Error("form is not homogeneous of multidegree (1,...,1) in slots 1..p");
}

}  // namespace

TensorCheck is_tensor(const Form& w, std::size_t p) {
    require_ones_degree(w, p);
    CovariantTensor t(w.space(), p);
    Form obstruction(w.space());
    for (const auto& [factors, coeff] : w.terms()) {
        bool all_singletons = true;
        for (const auto& [g, e] : factors)
            if (g.slots.size() != 1) all_singletons = false;
        if (!all_singletons) {
            obstruction += Form::monomial(coeff, Form::flatten(factors));
            continue;
        }
        // Singleton generators with distinct slots commute freely and the
        // canonical order sorts them by slot, so the tuple reads off directly.
        CovariantTensor::IndexTuple idx(p, 0);
        for (const auto& [g, e] : factors) idx[g.slots.elements().front() - 1] = g.coord;
        t.set_component(std::move(idx), coeff);
    }
    TensorCheck result{std::nullopt, obstruction};
    if (obstruction.is_zero()) result.tensor = std::move(t);
    return result;
}

CovariantTensor extract(const Form& w, std::size_t p) {
    TensorCheck check = is_tensor(w, p);
    if (!check.tensor) throw Error("form is not in the image of iota_p");
    return *check.tensor;
}

Poly evaluate_insertion(const Form& w, const std::vector<VectorField>& fields) {
    require_ones_degree(w, fields.size());
    Form r = w;
    for (std::size_t i = 0; i < fields.size(); ++i)
        r = insert(fields[i], static_cast<int>(i) + 1, r);
    auto value = r.as_coefficient();
    if (!value) throw Error("insertion evaluation did not reduce to a coefficient");
    return *value;
}

Poly evaluate_components(const CovariantTensor& t, const std::vector<VectorField>& fields) {
    if (fields.size() != t.order()) throw Error("field count must match tensor order");
    for (const auto& x : fields)
        if (x.space() != t.space()) throw Error("vector field / tensor space mismatch");
    Poly out(t.space());
    for (const auto& [idx, coeff] : t.components()) {
        Poly term = coeff;
        for (std::size_t i = 0; i < idx.size(); ++i) term = term * fields[i].component(idx[i]);
        out = out + term;
    }
    return out;
}

Form insert_slot(const Form& w, const VectorField& x, int slot, std::size_t p) {
    require_ones_degree(w, p);
    if (slot < 1 || static_cast<std::size_t>(slot) > p) throw Error("insertion slot out of range");
    Form r = insert(x, slot, w);
    return kappa(SlotMap::shift_down_above(slot), r);
}

CovariantTensor permute(const std::vector<std::size_t>& sigma, const CovariantTensor& t) {
    if (sigma.size() != t.order()) throw Error("permutation length must match tensor order");
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t image : sigma) {
        if (image < 1 || image > sigma.size() || seen[image - 1])
            throw Error("invalid permutation");
        seen[image - 1] = true;
    }
    CovariantTensor out(t.space(), t.order());
    for (const auto& [idx, coeff] : t.components()) {
        CovariantTensor::IndexTuple permuted(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) permuted[sigma[i] - 1] = idx[i];
        out.set_component(std::move(permuted), coeff);
    }
    return out;
}

CovariantTensor tensor_product(const CovariantTensor& t1, const CovariantTensor& t2) {
    if (t1.space() != t2.space()) throw Error("tensor space mismatch");
    CovariantTensor out(t1.space(), t1.order() + t2.order());
    for (const auto& [i1, c1] : t1.components())
        for (const auto& [i2, c2] : t2.components()) {
            CovariantTensor::IndexTuple idx = i1;
            idx.insert(idx.end(), i2.begin(), i2.end());
            out.set_component(std::move(idx), c1 * c2);
        }
    return out;
}

CovariantTensor lie_tensor(const VectorField& x, const CovariantTensor& t) {
    if (x.space() != t.space()) throw Error("vector field / tensor space mismatch");
    const std::size_t n = t.space().dim();
    const std::size_t p = t.order();
    CovariantTensor out(t.space(), p);
    // (L_X T)_{mu} = X(T_{mu}) + sum_i sum_nu (dX^nu/dx^{mu_i}) T_{mu|i->nu},
    // accumulated over the nonzero components of T.
    std::map<CovariantTensor::IndexTuple, Poly> acc;
    auto add = [&](const CovariantTensor::IndexTuple& idx, const Poly& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = acc.try_emplace(idx, v);
        if (!inserted) it->second = it->second + v;
    };
    for (const auto& [idx, coeff] : t.components()) {
        add(idx, x.apply(coeff));
        for (std::size_t i = 0; i < p; ++i) {
            // The component at nu in place i feeds every mu_i via dX^nu/dx^{mu_i}.
            for (std::size_t mu = 0; mu < n; ++mu) {
                Poly factor = x.component(idx[i]).partial(mu);
                if (factor.is_zero()) continue;
                CovariantTensor::IndexTuple target = idx;
                target[i] = mu;
                add(target, factor * coeff);
            }
        }
    }
    for (auto& [idx, v] : acc) out.set_component(idx, std::move(v));
    return out;
}

}  // namespace iforms
