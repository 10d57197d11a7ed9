#include "toric/horn.hpp"

#include "toric/errors.hpp"
#include "toric/polynomial.hpp"
#include "toric/tfp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace toric {

HornMatrix::HornMatrix(std::vector<std::vector<long long>> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) return;
    const std::size_t n = entries_.front().size();
    for (const auto& row : entries_)
        if (row.size() != n) throw InvalidHornMatrix("ragged Horn matrix");
    for (std::size_t c = 0; c < n; ++c) {
        long long s = 0;
        for (const auto& row : entries_) s += row[c];
        if (s != 0) throw InvalidHornMatrix("column " + std::to_string(c + 1) + " sums to " + std::to_string(s));
    }
}

std::vector<long long> HornMatrix::column(std::size_t c) const {
    std::vector<long long> out;
    out.reserve(rows());
    for (const auto& row : entries_) out.push_back(row.at(c));
    return out;
}

void HornPair::validate() const {
    if (lambda.size() != H.cols())
        throw InvalidHornMatrix("lambda has " + std::to_string(lambda.size()) + " entries for " +
                                std::to_string(H.cols()) + " columns");
    for (std::size_t c = 0; c < lambda.size(); ++c)
        if (lambda[c] == 0) throw InvalidHornMatrix("lambda entry " + std::to_string(c + 1) + " is zero");
    if (!column_labels.empty() && column_labels.size() != H.cols())
        throw InvalidHornMatrix("column label count does not match column count");
}

RationalVector horn_parametrize(const HornPair& pair, std::span<const Rational> u) {
    pair.validate();
    const auto& H = pair.H;
    if (u.size() != H.cols())
        throw DimensionMismatch("data vector has " + std::to_string(u.size()) + " entries, Horn matrix has " +
                                std::to_string(H.cols()) + " columns");
    RationalVector hu(H.rows(), Rational(0));
    for (std::size_t a = 0; a < H.rows(); ++a)
        for (std::size_t c = 0; c < H.cols(); ++c)
            if (H(a, c) != 0) hu[a] += u[c] * static_cast<long>(H(a, c));

    RationalVector out;
    out.reserve(H.cols());
    for (std::size_t c = 0; c < H.cols(); ++c) {
        Rational v = pair.lambda[c];
        for (std::size_t a = 0; a < H.rows(); ++a) {
            long long e = H(a, c);
            if (e == 0) continue;
            if (hu[a] == 0) {
                if (e < 0)
                    throw ZeroToNegativePower("row " + std::to_string(a + 1) + " of H u vanishes but column " +
                                              std::to_string(c + 1) + " raises it to the power " + std::to_string(e));
                v = 0;
                continue;
            }
            v *= pow(hu[a], static_cast<long>(e));
        }
        out.push_back(v);
    }
    return out;
}

namespace {

std::vector<Rational> random_positive_data(std::mt19937_64& rng, std::size_t n, bool ones = false) {
    std::vector<Rational> u;
    u.reserve(n);
    for (std::size_t c = 0; c < n; ++c) u.emplace_back(ones ? 1L : static_cast<long>(1 + rng() % 20));
    return u;
}

std::string format_vector(std::span<const Rational> v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ")";
    return os.str();
}

// Rows grouped into proportionality classes: row a = multiple[a] * primitive.
struct RowClass {
    std::vector<long long> primitive; // first nonzero entry positive
    std::vector<std::size_t> rows;
    std::vector<long long> multiples;
};

std::vector<RowClass> proportional_classes(const HornMatrix& H) {
    std::vector<RowClass> classes;
    std::map<std::vector<long long>, std::size_t> lookup;
    for (std::size_t a = 0; a < H.rows(); ++a) {
        const auto& row = H.entries()[a];
        long long g = 0;
        for (long long v : row) g = std::gcd(g, v < 0 ? -v : v);
        if (g == 0) continue;
        auto first = std::find_if(row.begin(), row.end(), [](long long v) { return v != 0; });
        long long mult = *first > 0 ? g : -g;
        std::vector<long long> prim;
        for (long long v : row) prim.push_back(v / mult);
        auto [it, inserted] = lookup.try_emplace(prim, classes.size());
        if (inserted) classes.push_back(RowClass{prim, {}, {}});
        classes[it->second].rows.push_back(a);
        classes[it->second].multiples.push_back(mult);
    }
    return classes;
}

// sum_c lambda_c (H u)^{h_c} == 1 as an identity of rational functions in u.
// Proportional rows are grouped first, so each distinct linear form appears
// once, and everything is brought over the common denominator
// prod_g L_g^{D_g} with D_g the largest negative exponent of form g.
bool symbolic_sum_is_one(const HornPair& pair) {
    const auto& H = pair.H;
    const std::size_t n = H.cols();
    auto vars = numbered_variables("u", n);
    auto classes = proportional_classes(H);

    std::vector<Polynomial> forms;
    std::vector<std::vector<long long>> exps(classes.size(), std::vector<long long>(n, 0));
    RationalVector constants(n, Rational(1));
    std::vector<long long> depth(classes.size(), 0);
    for (std::size_t g = 0; g < classes.size(); ++g) {
        RationalVector coeffs;
        for (long long v : classes[g].primitive) coeffs.emplace_back(static_cast<long>(v));
        forms.push_back(Polynomial::linear(vars, coeffs, Rational(0)));
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t m = 0; m < classes[g].rows.size(); ++m) {
                long long e = H(classes[g].rows[m], c);
                exps[g][c] += e;
                constants[c] *= pow(Rational(static_cast<long>(classes[g].multiples[m])), static_cast<long>(e));
            }
            depth[g] = std::max(depth[g], -exps[g][c]);
        }
    }

    std::vector<std::map<long long, Polynomial>> cache(classes.size());
    auto power = [&](std::size_t g, long long e) -> const Polynomial& {
        auto it = cache[g].find(e);
        if (it == cache[g].end()) it = cache[g].emplace(e, forms[g].pow(static_cast<unsigned>(e))).first;
        return it->second;
    };

    Polynomial den = Polynomial::constant(Rational(1), vars);
    for (std::size_t g = 0; g < classes.size(); ++g)
        if (depth[g] > 0) den *= power(g, depth[g]);

    Polynomial total(vars);
    for (std::size_t c = 0; c < n; ++c) {
        Polynomial term = Polynomial::constant(pair.lambda[c] * constants[c], vars);
        for (std::size_t g = 0; g < classes.size(); ++g) {
            long long e = exps[g][c] + depth[g];
            if (e > 0) term *= power(g, e);
        }
        total += term;
    }
    return total == den;
}

} // namespace

HornReport validate_horn_pair(const HornPair& pair, std::size_t trials, std::uint64_t seed) {
    pair.validate();
    HornReport report;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials && report.ok(); ++t) {
        auto u = random_positive_data(rng, pair.H.cols(), t == 0);
        RationalVector phi;
        try {
            phi = horn_parametrize(pair, u);
        } catch (const ZeroToNegativePower& e) {
            report.positive = false;
            report.witness = "undefined at u=" + format_vector(u) + ": " + e.what();
            break;
        }
        Rational sum = 0;
        for (const auto& v : phi) sum += v;
        if (sum != 1) {
            report.sums_to_one = false;
            report.witness = "coordinates sum to " + to_string(sum) + " at u=" + format_vector(u);
        }
        for (std::size_t c = 0; c < phi.size(); ++c) {
            if (phi[c] <= 0) {
                report.positive = false;
                if (report.witness.empty())
                    report.witness = "coordinate " + std::to_string(c + 1) + " is " + to_string(phi[c]) +
                                     " at u=" + format_vector(u);
                break;
            }
        }
    }
    if (pair.H.cols() <= 12) {
        report.symbolic_checked = true;
        if (!symbolic_sum_is_one(pair)) {
            if (report.sums_to_one) report.witness = "coordinates do not sum to one as rational functions of u";
            report.sums_to_one = false;
        }
    }
    return report;
}

HornPair simplex_horn_pair(std::size_t m) {
    if (m == 0) throw InvalidHornMatrix("simplex Horn pair needs at least one outcome");
    std::vector<std::vector<long long>> rows(m + 1, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][i] = 1;
        rows[m][i] = -1;
    }
    HornPair p;
    p.H = HornMatrix(std::move(rows));
    p.lambda = RationalVector(m, Rational(-1));
    return p;
}

namespace {

std::vector<std::vector<std::size_t>> blocks(const std::vector<std::size_t>& block, std::size_t cols, std::size_t r,
                                             const char* name) {
    if (block.size() != cols)
        throw InconsistentBlockIndex(std::string("block index of ") + name + " has " + std::to_string(block.size()) +
                                     " entries for " + std::to_string(cols) + " columns");
    std::vector<std::vector<std::size_t>> out(r);
    for (std::size_t c = 0; c < cols; ++c) {
        if (block[c] >= r)
            throw InconsistentBlockIndex(std::string("column ") + std::to_string(c + 1) + " of " + name +
                                         " assigned to degree " + std::to_string(block[c] + 1) + " of " +
                                         std::to_string(r));
        out[block[c]].push_back(c);
    }
    for (std::size_t i = 0; i < r; ++i)
        if (out[i].empty())
            throw InconsistentBlockIndex(std::string("degree class ") + std::to_string(i + 1) + " of " + name +
                                         " has no columns");
    return out;
}

} // namespace

HornPair tfp_horn_pair(const HornPair& pairB, const HornPair& pairC, std::size_t num_classes,
                       const std::vector<std::size_t>& block_b, const std::vector<std::size_t>& block_c) {
    pairB.validate();
    pairC.validate();
    auto bb = blocks(block_b, pairB.H.cols(), num_classes, "B");
    auto bc = blocks(block_c, pairC.H.cols(), num_classes, "C");
    HornPair simplex = simplex_horn_pair(num_classes);

    const std::size_t r1 = pairB.H.rows(), r2 = pairC.H.rows(), ra = simplex.H.rows();
    std::vector<std::vector<long long>> rows(r1 + r2 + ra);
    HornPair out;
    for (std::size_t i = 0; i < num_classes; ++i) {
        for (std::size_t j = 0; j < bb[i].size(); ++j) {
            for (std::size_t k = 0; k < bc[i].size(); ++k) {
                std::size_t cb = bb[i][j], cc = bc[i][k];
                for (std::size_t a = 0; a < r1; ++a) rows[a].push_back(pairB.H(a, cb));
                for (std::size_t a = 0; a < r2; ++a) rows[r1 + a].push_back(pairC.H(a, cc));
                for (std::size_t a = 0; a < ra; ++a) rows[r1 + r2 + a].push_back(-simplex.H(a, i));
                out.lambda.push_back(-pairB.lambda[cb] * pairC.lambda[cc]);
                out.column_labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                            std::to_string(k + 1) + ")");
            }
        }
    }
    out.H = HornMatrix(std::move(rows));
    return out;
}

HornPair tfp_horn_pair(const HornPair& pairB, const HornPair& pairC, const Multigrading& g,
                       const std::vector<std::size_t>& block_b, const std::vector<std::size_t>& block_c) {
    auto bb = blocks(block_b, pairB.H.cols(), g.size(), "B");
    auto bc = blocks(block_c, pairC.H.cols(), g.size(), "C");
    auto gb = g.classesB();
    auto gc = g.classesC();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (bb[i].size() != gb[i].size() || bc[i].size() != gc[i].size())
            throw InconsistentBlockIndex("degree class " + std::to_string(i + 1) +
                                         " has a different size in the Horn block index than in the multigrading");
    }
    return tfp_horn_pair(pairB, pairC, g.size(), block_b, block_c);
}

MinimizeResult minimize_horn_pair(const HornPair& pair, bool strict) {
    pair.validate();
    const auto& H = pair.H;
    const std::size_t n = H.cols();
    MinimizeResult result;
    RationalVector lambda = pair.lambda;
    std::vector<std::vector<long long>> rows;

    for (const auto& cls : proportional_classes(H)) {
        long long total = 0;
        for (long long m : cls.multiples) total += m;
        if (cls.rows.size() == 1) {
            rows.push_back(H.entries()[cls.rows.front()]);
            continue;
        }
        if (total == 0) {
            std::string which;
            for (auto a : cls.rows) which += (which.empty() ? "" : ",") + std::to_string(a + 1);
            if (strict) throw MergeAborted("rows " + which + " are proportional with multiples summing to zero");
            result.notes.push_back("rows " + which + " left unmerged: multiples sum to zero");
            for (auto a : cls.rows) rows.push_back(H.entries()[a]);
            continue;
        }
        std::vector<long long> merged(n, 0);
        for (auto a : cls.rows)
            for (std::size_t c = 0; c < n; ++c) merged[c] += H(a, c);
        for (std::size_t c = 0; c < n; ++c) {
            Rational factor = 1;
            for (std::size_t m = 0; m < cls.rows.size(); ++m)
                factor *= pow(Rational(static_cast<long>(cls.multiples[m])), static_cast<long>(H(cls.rows[m], c)));
            factor /= pow(Rational(static_cast<long>(total)), static_cast<long>(merged[c]));
            lambda[c] *= factor;
        }
        std::string which;
        for (auto a : cls.rows) which += (which.empty() ? "" : ",") + std::to_string(a + 1);
        result.notes.push_back("merged rows " + which);
        rows.push_back(std::move(merged));
    }

    result.pair.H = HornMatrix(std::move(rows));
    result.pair.lambda = std::move(lambda);
    result.pair.column_labels = pair.column_labels;

    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 100; ++t) {
        auto u = random_positive_data(rng, n);
        RationalVector before;
        try {
            before = horn_parametrize(pair, u);
        } catch (const ZeroToNegativePower&) {
            continue; // outside the domain of the input pair
        }
        if (before != horn_parametrize(result.pair, u))
            throw Error("minimized Horn pair disagrees with the input at u=" + format_vector(u));
    }
    return result;
}

HornPair permute_columns(const HornPair& pair, std::span<const std::size_t> perm) {
    pair.validate();
    if (perm.size() != pair.H.cols()) throw DimensionMismatch("permutation length does not match column count");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw DimensionMismatch("not a permutation");
        seen[p] = true;
    }
    std::vector<std::vector<long long>> rows(pair.H.rows(), std::vector<long long>(perm.size()));
    HornPair out;
    for (std::size_t c = 0; c < perm.size(); ++c) {
        for (std::size_t a = 0; a < pair.H.rows(); ++a) rows[a][c] = pair.H(a, perm[c]);
        out.lambda.push_back(pair.lambda[perm[c]]);
        if (!pair.column_labels.empty()) out.column_labels.push_back(pair.column_labels[perm[c]]);
    }
    out.H = HornMatrix(std::move(rows));
    return out;
}

HornPair align_columns(const HornPair& pair, const std::vector<std::string>& labels) {
    if (pair.column_labels.size() != labels.size())
        throw DimensionMismatch("cannot align Horn pair columns: label counts differ");
    std::vector<std::size_t> perm;
    for (const auto& l : labels) {
        auto it = std::find(pair.column_labels.begin(), pair.column_labels.end(), l);
        if (it == pair.column_labels.end()) throw DimensionMismatch("Horn pair has no column labelled " + l);
        perm.push_back(static_cast<std::size_t>(it - pair.column_labels.begin()));
    }
    return permute_columns(pair, perm);
}

} // namespace toric
