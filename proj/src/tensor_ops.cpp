#include "wmhh/tensor_ops.hpp"

namespace wmhh {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size());
    std::size_t acc = 1;
    for (std::size_t i = dims.size(); i-- > 0;) {
        s[i] = acc;
        acc *= dims[i];
    }
    return s;
}

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        idx[i] = flat % dims[i];
        flat /= dims[i];
    }
    return idx;
}

}  // namespace

TensorElement TensorElement::basis(const std::vector<std::size_t>& dims,
                                   const std::vector<std::size_t>& index) {
    TensorElement e = zero(dims);
    auto st = strides(dims);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (index[i] >= dims[i]) throw ShapeError("TensorElement::basis index out of range");
        flat += index[i] * st[i];
    }
    e.data[flat] = 1;
    return e;
}

TensorElement TensorElement::zero(const std::vector<std::size_t>& dims) {
    TensorElement e;
    e.dims = dims;
    e.data.assign(product(dims), Scalar(0));
    return e;
}

TensorElement TensorElement::from_vec(const Vec& v) {
    TensorElement e;
    e.dims = {v.size()};
    e.data = v;
    return e;
}

TensorElement te_add(const TensorElement& a, const TensorElement& b) {
    if (a.dims != b.dims) throw ShapeError("te_add shape mismatch");
    TensorElement r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

TensorElement te_sub(const TensorElement& a, const TensorElement& b) {
    if (a.dims != b.dims) throw ShapeError("te_sub shape mismatch");
    TensorElement r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] -= b.data[i];
    return r;
}

TensorElement te_scale(const Scalar& c, const TensorElement& a) {
    TensorElement r = a;
    for (auto& x : r.data) x *= c;
    return r;
}

bool te_is_zero(const TensorElement& a) { return is_zero(a.data); }

TensorElement te_tensor(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    r.dims = a.dims;
    r.dims.insert(r.dims.end(), b.dims.begin(), b.dims.end());
    r.data.assign(a.data.size() * b.data.size(), Scalar(0));
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        if (a.data[i] == 0) continue;
        for (std::size_t j = 0; j < b.data.size(); ++j)
            if (b.data[j] != 0) r.data[i * b.data.size() + j] = a.data[i] * b.data[j];
    }
    return r;
}

TensorElement apply_map(const TensorElement& e, std::size_t leg, const LinearMap& f) {
    if (leg >= e.legs() || e.dims[leg] != f.cols())
        throw ShapeError("apply_map leg/shape mismatch");
    std::vector<std::size_t> out_dims = e.dims;
    out_dims[leg] = f.rows();
    TensorElement r = TensorElement::zero(out_dims);
    auto in_st = strides(e.dims);
    auto out_st = strides(out_dims);
    for (std::size_t flat = 0; flat < e.data.size(); ++flat) {
        if (e.data[flat] == 0) continue;
        auto idx = unflatten(flat, e.dims);
        std::size_t base = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (i != leg) base += idx[i] * out_st[i];
        for (std::size_t row = 0; row < f.rows(); ++row) {
            const Scalar& c = f.at(row, idx[leg]);
            if (c != 0) r.data[base + row * out_st[leg]] += c * e.data[flat];
        }
    }
    return r;
}

TensorElement split_leg(const TensorElement& e, std::size_t leg, const Tensor3& d) {
    if (leg >= e.legs() || e.dims[leg] != d.d0())
        throw ShapeError("split_leg leg/shape mismatch");
    std::vector<std::size_t> out_dims;
    for (std::size_t i = 0; i < e.dims.size(); ++i) {
        if (i == leg) {
            out_dims.push_back(d.d1());
            out_dims.push_back(d.d2());
        } else {
            out_dims.push_back(e.dims[i]);
        }
    }
    TensorElement r = TensorElement::zero(out_dims);
    auto out_st = strides(out_dims);
    for (std::size_t flat = 0; flat < e.data.size(); ++flat) {
        if (e.data[flat] == 0) continue;
        auto idx = unflatten(flat, e.dims);
        std::size_t base = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i == leg) continue;
            base += idx[i] * out_st[i < leg ? i : i + 1];
        }
        for (std::size_t j = 0; j < d.d1(); ++j)
            for (std::size_t k = 0; k < d.d2(); ++k) {
                const Scalar& c = d.at(idx[leg], j, k);
                if (c != 0) r.data[base + j * out_st[leg] + k * out_st[leg + 1]] += c * e.data[flat];
            }
    }
    return r;
}

TensorElement contract_pair(const TensorElement& e, std::size_t leg, const Tensor3& t) {
    if (leg + 1 >= e.legs() || e.dims[leg] != t.d0() || e.dims[leg + 1] != t.d1())
        throw ShapeError("contract_pair leg/shape mismatch");
    std::vector<std::size_t> out_dims;
    for (std::size_t i = 0; i < e.dims.size(); ++i) {
        if (i == leg) {
            out_dims.push_back(t.d2());
            ++i;  // skip leg+1
        } else {
            out_dims.push_back(e.dims[i]);
        }
    }
    TensorElement r = TensorElement::zero(out_dims);
    auto out_st = strides(out_dims);
    for (std::size_t flat = 0; flat < e.data.size(); ++flat) {
        if (e.data[flat] == 0) continue;
        auto idx = unflatten(flat, e.dims);
        std::size_t base = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i == leg || i == leg + 1) continue;
            base += idx[i] * out_st[i < leg ? i : i - 1];
        }
        for (std::size_t k = 0; k < t.d2(); ++k) {
            const Scalar& c = t.at(idx[leg], idx[leg + 1], k);
            if (c != 0) r.data[base + k * out_st[leg]] += c * e.data[flat];
        }
    }
    return r;
}

TensorElement contract_covector(const TensorElement& e, std::size_t leg, const Vec& phi) {
    if (leg >= e.legs() || e.dims[leg] != phi.size())
        throw ShapeError("contract_covector leg/shape mismatch");
    std::vector<std::size_t> out_dims;
    for (std::size_t i = 0; i < e.dims.size(); ++i)
        if (i != leg) out_dims.push_back(e.dims[i]);
    TensorElement r = TensorElement::zero(out_dims);
    auto out_st = strides(out_dims);
    for (std::size_t flat = 0; flat < e.data.size(); ++flat) {
        if (e.data[flat] == 0) continue;
        auto idx = unflatten(flat, e.dims);
        if (phi[idx[leg]] == 0) continue;
        std::size_t base = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i == leg) continue;
            base += idx[i] * out_st[i < leg ? i : i - 1];
        }
        r.data[base] += phi[idx[leg]] * e.data[flat];
    }
    return r;
}

TensorElement permute_legs(const TensorElement& e, const std::vector<std::size_t>& perm) {
    if (perm.size() != e.legs()) throw ShapeError("permute_legs arity mismatch");
    std::vector<std::size_t> out_dims(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out_dims[i] = e.dims[perm[i]];
    TensorElement r = TensorElement::zero(out_dims);
    auto out_st = strides(out_dims);
    for (std::size_t flat = 0; flat < e.data.size(); ++flat) {
        if (e.data[flat] == 0) continue;
        auto idx = unflatten(flat, e.dims);
        std::size_t out = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) out += idx[perm[i]] * out_st[i];
        r.data[out] = e.data[flat];
    }
    return r;
}

TensorElement drop_unit_leg(const TensorElement& e, std::size_t leg) {
    if (leg >= e.legs() || e.dims[leg] != 1) throw ShapeError("drop_unit_leg: leg dim != 1");
    TensorElement r = e;
    r.dims.erase(r.dims.begin() + static_cast<std::ptrdiff_t>(leg));
    return r;
}

TensorElement fuse_legs(const TensorElement& e, std::size_t leg) {
    if (leg + 1 >= e.legs()) throw ShapeError("fuse_legs: need two adjacent legs");
    TensorElement r = e;
    r.dims[leg] *= r.dims[leg + 1];
    r.dims.erase(r.dims.begin() + static_cast<std::ptrdiff_t>(leg + 1));
    return r;
}

TensorElement unfuse_leg(const TensorElement& e, std::size_t leg, std::size_t d1,
                         std::size_t d2) {
    if (leg >= e.legs() || e.dims[leg] != d1 * d2)
        throw ShapeError("unfuse_leg: dimension mismatch");
    TensorElement r = e;
    r.dims[leg] = d1;
    r.dims.insert(r.dims.begin() + static_cast<std::ptrdiff_t>(leg + 1), d2);
    return r;
}

TensorElement apply_map2(const TensorElement& e, std::size_t leg, const LinearMap& f) {
    const std::size_t d1 = e.dims[leg], d2 = e.dims[leg + 1];
    if (f.rows() != f.cols() || f.cols() != d1 * d2)
        throw ShapeError("apply_map2: expects a square map on the fused pair");
    return unfuse_leg(apply_map(fuse_legs(e, leg), leg, f), leg, d1, d2);
}

}  // namespace wmhh
