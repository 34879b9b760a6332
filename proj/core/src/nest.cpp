#include "ternary/nest.hpp"

#include <sstream>

#include "ternary/errors.hpp"

namespace ternary {

NestSpec::NestSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InputError("nest needs at least one dimension");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] == 0) throw InputError("nest dimensions must be positive");
        if (i > 0 && dims_[i] <= dims_[i - 1]) throw InputError("nest dimensions must be strictly increasing");
    }
    if (dims_.back() < 2) throw InputError("ambient dimension must be at least 2");
}

NestSpec NestSpec::parse(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789 ") != std::string::npos) {
            throw InputError("bad nest '" + text + "' (expected comma-separated dimensions, e.g. 1,2,4)");
        }
        dims.push_back(std::stoul(token));
    }
    return NestSpec(std::move(dims));
}

std::vector<std::size_t> NestSpec::block_sizes() const {
    std::vector<std::size_t> sizes;
    std::size_t prev = 0;
    for (auto d : dims_) {
        sizes.push_back(d - prev);
        prev = d;
    }
    return sizes;
}

std::size_t NestSpec::block_of(std::size_t p) const {
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (p < dims_[i]) return i;
    }
    throw InputError("coordinate outside the ambient space");
}

std::string NestSpec::str() const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(dims_[i]);
    }
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> allowed_positions(const NestSpec& spec) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = spec.ambient();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (spec.block_of(q) >= spec.block_of(p)) out.emplace_back(p, q);
        }
    }
    return out;
}

std::string unit_label(std::size_t p, std::size_t q, std::size_t n) {
    if (n < 10) return "E" + std::to_string(p + 1) + std::to_string(q + 1);
    return "E" + std::to_string(p + 1) + "," + std::to_string(q + 1);
}

FiniteAlgebra unit_algebra(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                           const std::vector<long>& slot) {
    const std::size_t d = positions.size();
    std::vector<SparseRow> products(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto [p, q] = positions[i];
            const auto [r, s] = positions[j];
            if (q != r) continue;
            const long k = slot[p * n + s];
            if (k < 0) throw std::logic_error("nest pattern not closed under multiplication");
            products[i * d + j].push_back({static_cast<std::size_t>(k), Scalar(1)});
        }
    }
    Vec unity(d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        const auto [p, q] = positions[i];
        if (p == q) unity[i] = 1;
        labels.push_back(unit_label(p, q, n));
    }
    return FiniteAlgebra(d, std::move(products), std::move(unity), std::move(labels));
}

std::vector<long> slot_table(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& positions) {
    std::vector<long> slot(n * n, -1);
    for (std::size_t i = 0; i < positions.size(); ++i) slot[positions[i].first * n + positions[i].second] = static_cast<long>(i);
    return slot;
}

}  // namespace

NestAlgebra::NestAlgebra(NestSpec spec)
    : spec_(std::move(spec)),
      positions_(allowed_positions(spec_)),
      slot_(slot_table(spec_.ambient(), positions_)),
      algebra_(unit_algebra(spec_.ambient(), positions_, slot_)) {}

std::optional<std::size_t> NestAlgebra::slot(std::size_t p, std::size_t q) const {
    const std::size_t nn = n();
    if (p >= nn || q >= nn || slot_[p * nn + q] < 0) return std::nullopt;
    return static_cast<std::size_t>(slot_[p * nn + q]);
}

Vec NestAlgebra::unit(std::size_t p, std::size_t q) const {
    auto s = slot(p, q);
    if (!s) throw MembershipError("matrix unit (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ") is not in the nest algebra");
    return algebra_.unit(*s);
}

Mat NestAlgebra::to_dense(const Vec& element) const {
    if (element.size() != dim()) throw InputError("element has wrong length");
    Mat out(n(), n());
    for (std::size_t i = 0; i < dim(); ++i) out(positions_[i].first, positions_[i].second) = element[i];
    return out;
}

Vec NestAlgebra::from_dense(const Mat& m) const {
    if (m.rows() != n() || m.cols() != n()) throw InputError("dense matrix has wrong shape");
    Vec out(dim());
    for (std::size_t p = 0; p < n(); ++p) {
        for (std::size_t q = 0; q < n(); ++q) {
            if (m(p, q).is_zero()) continue;
            auto s = slot(p, q);
            if (!s) {
                throw MembershipError("entry (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                                      ") lies outside the nest algebra pattern");
            }
            out[*s] = m(p, q);
        }
    }
    return out;
}

Vec NestAlgebra::nest_projection(std::size_t i) const {
    Vec out(dim());
    for (std::size_t p = 0; p < spec_.dims().at(i); ++p) out[*slot(p, p)] = 1;
    return out;
}

std::vector<Vec> NestAlgebra::idempotent_generators() const {
    std::vector<Vec> out;
    for (std::size_t p = 0; p < n(); ++p) out.push_back(unit(p, p));
    for (const auto& [p, q] : positions_) {
        if (p == q) continue;
        out.push_back(unit(p, p) + unit(p, q));
    }
    for (std::size_t i = 0; i < spec_.dims().size(); ++i) out.push_back(nest_projection(i));
    return out;
}

Mat mult_rep(Side side, const Mat& a, const NestAlgebra& nest) {
    return nest.algebra().rep(side, nest.from_dense(a));
}

ZeroProductSampler::ZeroProductSampler(const FiniteAlgebra& alg, std::vector<Vec> idempotents) : alg_(alg) {
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (alg.product(i, j).empty()) unit_pairs_.emplace_back(i, j);
        }
    }
    for (auto& p : idempotents) {
        Vec q = alg.unity() - p;
        complements_.push_back(p);
        complements_.push_back(std::move(q));
    }
}

std::optional<WitnessPair> ZeroProductSampler::canonical(std::size_t index) const {
    const std::size_t d = alg_.dim();
    const std::size_t which = index / (d * d);
    const std::size_t x = (index / d) % d;
    const std::size_t y = index % d;
    const Vec& p = complements_[which];
    const Vec& q = complements_[which ^ 1U];
    Vec a = alg_.unit_times(x, p);
    if (is_zero(a)) return std::nullopt;
    Vec b = alg_.times_unit(q, y);
    if (is_zero(b)) return std::nullopt;
    return WitnessPair{std::move(a), std::move(b)};
}

std::optional<WitnessPair> ZeroProductSampler::random_pair(SplitMix64& rng, Field field, int attempts) const {
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Vec a = random_sparse_vec(rng, alg_.dim(), field);
        const auto ann = right_annihilator(alg_, a);
        if (ann.empty()) continue;
        Vec b = combine(ann, random_vec(rng, ann.size(), field), alg_.dim());
        if (is_zero(b)) continue;
        return WitnessPair{std::move(a), std::move(b)};
    }
    return std::nullopt;
}

std::vector<WitnessPair> sample_zero_product_pairs(const NestAlgebra& nest, std::size_t count, std::uint64_t seed,
                                                   Field field) {
    if (count == 0) throw InputError("sample count must be at least 1");
    const ZeroProductSampler sampler(nest.algebra(), nest.idempotent_generators());
    std::vector<WitnessPair> out;
    sampler.visit_structured([&](const WitnessPair& pair) {
        out.push_back(pair);
        return true;
    });
    SplitMix64 rng(seed);
    std::size_t produced = 0;
    for (std::size_t guard = 0; produced < count && guard < 64 * count; ++guard) {
        if (auto pair = sampler.random_pair(rng, field)) {
            out.push_back(std::move(*pair));
            ++produced;
        }
    }
    return out;
}

}  // namespace ternary
