#include "heisuper/b_form.hpp"

#include <stdexcept>
#include <utility>

namespace heisuper {

namespace {

std::size_t block_rank(const std::vector<std::vector<GaussRational>>& gram,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    detail::Mat m;
    m.reserve(rows.size());
    for (std::size_t r : rows) {
        detail::Row row;
        row.reserve(cols.size());
        for (std::size_t c : cols) row.push_back(gram[r][c]);
        m.push_back(std::move(row));
    }
    return detail::reduce(std::move(m)).rank();
}

} // namespace

BForm::BForm(const LieSuperalgebra& g, Subspace complement)
    : g_(g), complement_(std::move(complement)) {
    const std::size_t k = complement_.dim();
    if (k + 1 != g_.dim())
        throw std::invalid_argument("b_form: complement dimension must be dim(g) - 1");
    const GradedVector z_unit = GradedVector::unit(g_.super_dim(), g_.center_index());
    if (complement_.contains(z_unit))
        throw std::invalid_argument("b_form: complement contains the center");
    for (const auto& v : complement_.basis()) {
        auto p = v.homogeneous_parity();
        if (!p)
            throw std::invalid_argument("b_form: complement basis must be homogeneous");
        basis_parities_.push_back(*p);
    }
    form_parity_ = g_.parity(g_.center_index());

    gram_.assign(k, std::vector<GaussRational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            GradedVector br = g_.bracket(complement_.basis()[i], complement_.basis()[j]);
            for (std::size_t c = 0; c < br.size(); ++c)
                if (c != g_.center_index() && !br.at(c).is_zero())
                    throw std::logic_error("b_form: bracket leaves the center line");
            gram_[i][j] = br.at(g_.center_index());
        }

    std::vector<std::size_t> evens, odds, all;
    for (std::size_t i = 0; i < k; ++i) {
        all.push_back(i);
        (basis_parities_[i] == Parity::even ? evens : odds).push_back(i);
    }
    if (block_rank(gram_, all, all) != k)
        throw std::logic_error("b_form: form is degenerate on the complement");
    if (form_parity_ == Parity::even) {
        if (block_rank(gram_, evens, evens) != evens.size())
            throw std::logic_error("b_form: even-even restriction is degenerate");
        if (block_rank(gram_, odds, odds) != odds.size())
            throw std::logic_error("b_form: odd-odd restriction is degenerate");
    } else {
        // Odd form: diagonal blocks vanish by parity, the cross pairing
        // must be a non-degenerate (square) pairing.
        if (evens.size() != odds.size() || block_rank(gram_, evens, odds) != evens.size())
            throw std::logic_error("b_form: even-odd pairing is degenerate");
    }
}

BForm b_form(const LieSuperalgebra& g, const Subspace& complement) {
    return BForm(g, complement);
}

GaussRational BForm::eval(const GradedVector& x, const GradedVector& y) const {
    return g_.bracket(x, y).at(g_.center_index());
}

bool is_isotropic(const BForm& b, const Subspace& s) {
    for (const auto& v : s.basis())
        if (!b.complement().contains(v))
            throw std::invalid_argument("is_isotropic: subspace is not contained in the complement");
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            if (!b.eval(x, y).is_zero()) return false;
    return true;
}

namespace {

using SparseVec = std::vector<std::pair<std::size_t, GaussRational>>;

detail::Row densify(const SparseVec& v, std::size_t k) {
    detail::Row out(k);
    for (const auto& [pos, co] : v) out[pos] += co;
    return out;
}

// Incremental row echelon used for the independence test of the greedy
// sampler: rows are kept reduced with pivot coefficient 1.
struct IncrementalEchelon {
    std::vector<detail::Row> rows;
    std::vector<std::size_t> pivots;

    // Returns false when v lies in the current span, otherwise inserts it.
    bool insert(detail::Row v) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const GaussRational coef = v[pivots[i]];
            if (coef.is_zero()) continue;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!rows[i][c].is_zero()) v[c] -= coef * rows[i][c];
        }
        std::size_t pivot = v.size();
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot == v.size()) return false;
        const GaussRational inv = v[pivot].inv();
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
        return true;
    }
};

} // namespace

IsotropicSample random_isotropic_subspace(const BForm& b, Rng& rng) {
    const std::size_t k = b.complement().dim();
    const SuperDim ambient = b.algebra().super_dim();
    const std::size_t cap = (b.algebra().dim() - 1) / 2;

    std::vector<std::size_t> evens, odds;
    for (std::size_t i = 0; i < k; ++i)
        (b.basis_parity(i) == Parity::even ? evens : odds).push_back(i);

    std::vector<SparseVec> accepted;
    std::vector<Parity> accepted_parity;
    IncrementalEchelon echelon;

    const int attempts = 24;
    for (int t = 0; t < attempts && accepted.size() < cap; ++t) {
        const std::vector<std::size_t>* block = nullptr;
        Parity parity = Parity::even;
        if (!evens.empty() && (odds.empty() || rng.coin())) {
            block = &evens;
        } else if (!odds.empty()) {
            block = &odds;
            parity = Parity::odd;
        }
        if (!block) break;

        SparseVec cand;
        const bool pair_combo = parity == Parity::odd && block->size() >= 2 && rng.coin();
        if (pair_combo) {
            // alpha * (e_p + i e_q): self-pairing cancels whenever the two
            // chosen directions carry equal diagonal values and no cross term.
            std::size_t p = (*block)[static_cast<std::size_t>(rng.integer(0, long(block->size()) - 1))];
            std::size_t q = p;
            while (q == p)
                q = (*block)[static_cast<std::size_t>(rng.integer(0, long(block->size()) - 1))];
            GaussRational alpha(rng.integer(1, 3));
            if (rng.coin()) alpha = -alpha;
            cand.emplace_back(p, alpha);
            cand.emplace_back(q, alpha * GaussRational::imaginary_unit());
        } else {
            const long max_support = std::min<long>(3, long(block->size()));
            const long support = rng.integer(1, max_support);
            std::vector<std::size_t> chosen;
            while (long(chosen.size()) < support) {
                std::size_t pos =
                    (*block)[static_cast<std::size_t>(rng.integer(0, long(block->size()) - 1))];
                bool dup = false;
                for (std::size_t c : chosen) dup = dup || c == pos;
                if (!dup) chosen.push_back(pos);
            }
            for (std::size_t pos : chosen) {
                GaussRational co(rng.integer(1, 3));
                if (rng.coin()) co = -co;
                if (rng.integer(0, 3) == 0) co *= GaussRational::imaginary_unit();
                cand.emplace_back(pos, co);
            }
        }

        // Gc = gram * candidate, then every B-value is a short dot product.
        detail::Row gc(k);
        for (std::size_t r = 0; r < k; ++r)
            for (const auto& [pos, co] : cand) {
                const GaussRational& gr = b.gram()[r][pos];
                if (!gr.is_zero()) gc[r] += gr * co;
            }
        GaussRational self(0);
        for (const auto& [pos, co] : cand) self += co * gc[pos];
        if (!self.is_zero()) continue;

        bool orthogonal = true;
        for (const auto& a : accepted) {
            GaussRational val(0);
            for (const auto& [pos, co] : a) val += co * gc[pos];
            if (!val.is_zero()) {
                orthogonal = false;
                break;
            }
        }
        if (!orthogonal) continue;

        if (!echelon.insert(densify(cand, k))) continue;

        accepted.push_back(std::move(cand));
        accepted_parity.push_back(parity);
    }

    std::vector<GradedVector> basis;
    basis.reserve(accepted.size());
    IsotropicSample out{Subspace::zero(ambient), 0, 0};
    for (std::size_t a = 0; a < accepted.size(); ++a) {
        GradedVector v(ambient);
        for (const auto& [pos, co] : accepted[a]) {
            GradedVector term = b.complement().basis()[pos];
            term *= co;
            v += term;
        }
        basis.push_back(std::move(v));
        (accepted_parity[a] == Parity::even ? out.even_dim : out.odd_dim) += 1;
    }
    out.subspace = Subspace(ambient, std::move(basis));
    return out;
}

} // namespace heisuper
