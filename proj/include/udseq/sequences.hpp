#pragma once

// Sequence generators and ingestion.
//
// Every generator is exposed two ways: as a materialized PointList (the
// common case) and as a SequenceSource, a random-access view that can serve
// coordinates for indices far beyond what fits in memory. Coverage sweeps
// over late schedule blocks rely on the source form.

#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "udseq/core.hpp"

namespace udseq {

// ---------------------------------------------------------------------------
// Random-access view of a sequence prefix. Indices are 1-based.

class SequenceSource {
  public:
    virtual ~SequenceSource() = default;

    virtual int dim() const = 0;
    // Largest index this source can serve.
    virtual uint64_t size() const = 0;
    virtual double coord(uint64_t j, int axis) const = 0;

    Point point(uint64_t j) const {
        Point p(dim());
        for (int i = 0; i < dim(); ++i) p[i] = coord(j, i);
        return p;
    }

    PointList materialize(uint64_t count) const {
        if (count < 1) throw validation_error("count must be >= 1");
        if (count > size())
            throw guard_error("requested prefix exceeds source capacity");
        PointList out(dim());
        out.reserve(count);
        std::vector<double> buf(dim());
        for (uint64_t j = 1; j <= count; ++j) {
            for (int i = 0; i < dim(); ++i) buf[i] = coord(j, i);
            out.append_unchecked(buf.data());
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Kronecker sequence omega_j = ({j a_1}, ..., {j a_n}).

class KroneckerSource final : public SequenceSource {
  public:
    explicit KroneckerSource(std::vector<double> alpha)
        : alpha_(std::move(alpha)) {
        if (alpha_.empty()) throw validation_error("alpha must be nonempty");
        for (double a : alpha_)
            if (!(a > 0.0 && a < 1.0))
                throw validation_error("kronecker alpha must lie in (0,1)");
    }

    int dim() const override { return static_cast<int>(alpha_.size()); }
    uint64_t size() const override { return uint64_t(1) << 52; }
    double coord(uint64_t j, int axis) const override {
        return frac_mul(j, alpha_[axis]);
    }

    const std::vector<double>& alpha() const { return alpha_; }

  private:
    std::vector<double> alpha_;
};

// ---------------------------------------------------------------------------
// Radical-inverse (Halton; van der Corput when n = 1).
//
// phi_b(j) reverses the base-b digits of j across the radix point. For
// j < b^L this equals rev_L(j) / b^L with rev_L the L-digit reversal, which
// is what makes interval queries invertible (see ubiquity.hpp).

inline double radical_inverse(uint64_t j, uint64_t base) {
    // Digit reversal as an exact rational num / base^L, rounded once.
    uint64_t num = 0;
    double den = 1.0;
    while (j > 0) {
        num = num * base + j % base;
        den *= static_cast<double>(base);
        j /= base;
    }
    return static_cast<double>(num) / den;
}

class RadicalInverseSource final : public SequenceSource {
  public:
    explicit RadicalInverseSource(std::vector<uint64_t> bases)
        : bases_(std::move(bases)) {
        if (bases_.empty()) throw validation_error("bases must be nonempty");
        for (uint64_t b : bases_)
            if (b < 2) throw validation_error("radical-inverse bases must be >= 2");
        for (size_t i = 0; i < bases_.size(); ++i)
            for (size_t k = i + 1; k < bases_.size(); ++k)
                if (std::gcd(bases_[i], bases_[k]) != 1)
                    throw validation_error(
                        "radical-inverse bases must be pairwise coprime");
    }

    int dim() const override { return static_cast<int>(bases_.size()); }
    uint64_t size() const override { return uint64_t(1) << 62; }
    double coord(uint64_t j, int axis) const override {
        return radical_inverse(j, bases_[axis]);
    }

    const std::vector<uint64_t>& bases() const { return bases_; }

  private:
    std::vector<uint64_t> bases_;
};

// ---------------------------------------------------------------------------
// Seeded i.i.d. uniform surrogate. Coordinate (j, i) is draw number
// (j-1)*n + i + 1 of SplitMix64 from the seed, so access is O(1) and the
// materialized list equals the streamed one draw for draw.

class IidUniformSource final : public SequenceSource {
  public:
    IidUniformSource(uint64_t seed, int dim) : seed_(seed), dim_(dim) {
        if (dim < 1) throw validation_error("dimension must be >= 1");
    }

    int dim() const override { return dim_; }
    uint64_t size() const override { return uint64_t(1) << 52; }
    double coord(uint64_t j, int axis) const override {
        const uint64_t k = (j - 1) * static_cast<uint64_t>(dim_) + axis + 1;
        return u64_to_unit(splitmix64_at(seed_, k));
    }

    uint64_t seed() const { return seed_; }

  private:
    uint64_t seed_;
    int dim_;
};

// ---------------------------------------------------------------------------
// Generators (materialized form).

inline PointList gen_kronecker(const std::vector<double>& alpha, uint64_t count) {
    KroneckerSource src(alpha);
    return src.materialize(count);
}

inline PointList gen_radical_inverse(const std::vector<uint64_t>& bases,
                                     uint64_t count) {
    RadicalInverseSource src(bases);
    return src.materialize(count);
}

inline PointList gen_iid_uniform(uint64_t seed, int dim, uint64_t count) {
    IidUniformSource src(seed, dim);
    return src.materialize(count);
}

// ---------------------------------------------------------------------------
// Text format: one point per line, space-separated decimal coordinates,
// '#' comments and blank lines ignored, dimension inferred from the first
// data line.

inline PointList load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open sequence file: " + path);

    PointList out;
    std::string line;
    uint64_t lineno = 0;
    int dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream ss(line);
        std::vector<double> coords;
        double c;
        while (ss >> c) coords.push_back(c);
        if (!ss.eof()) {
            std::string tail;
            ss.clear();
            ss >> tail;
            throw io_error("line " + std::to_string(lineno) +
                           ": malformed coordinate '" + tail + "'");
        }
        if (coords.empty())
            throw io_error("line " + std::to_string(lineno) + ": no coordinates");

        if (dim == 0) {
            dim = static_cast<int>(coords.size());
        } else if (static_cast<int>(coords.size()) != dim) {
            throw io_error("line " + std::to_string(lineno) +
                           ": dimension mismatch (expected " +
                           std::to_string(dim) + " coordinates, got " +
                           std::to_string(coords.size()) + ")");
        }
        for (double x : coords) {
            if (!(x >= 0.0 && x < 1.0))
                throw io_error("line " + std::to_string(lineno) +
                               ": coordinate " + fp17(x) +
                               " outside [0,1)");
        }
        if (out.dim() == 0) out = PointList(dim);
        out.append_unchecked(coords.data());
    }
    if (out.size() == 0) throw io_error("sequence file has no data: " + path);
    return out;
}

inline void save_sequence(const PointList& seq, const std::string& path) {
    std::ofstream outf(path, std::ios::binary);  // binary: LF endings everywhere
    if (!outf) throw io_error("cannot write sequence file: " + path);
    const int n = seq.dim();
    for (uint64_t j = 1; j <= seq.size(); ++j) {
        for (int i = 0; i < n; ++i) {
            if (i) outf << ' ';
            outf << fp17(seq.coord(j, i));
        }
        outf << '\n';
    }
}

// ---------------------------------------------------------------------------
// GeneratorSpec: a serializable description of where points come from.

struct GeneratorSpec {
    enum class Kind { kronecker, radical_inverse, iid_uniform, file };

    Kind kind = Kind::kronecker;
    std::vector<double> alpha;     // kronecker
    std::vector<uint64_t> bases;   // radical_inverse
    uint64_t seed = 0;             // iid_uniform
    int dim = 1;                   // iid_uniform
    std::string path;              // file
    uint64_t count = 0;

    std::unique_ptr<SequenceSource> make_source() const {
        switch (kind) {
            case Kind::kronecker:
                return std::make_unique<KroneckerSource>(alpha);
            case Kind::radical_inverse:
                return std::make_unique<RadicalInverseSource>(bases);
            case Kind::iid_uniform:
                return std::make_unique<IidUniformSource>(seed, dim);
            case Kind::file:
                throw validation_error(
                    "file-backed specs must be materialized, not streamed");
        }
        throw validation_error("unknown generator kind");
    }

    PointList generate() const {
        if (kind == Kind::file) {
            PointList seq = load_sequence(path);
            if (count != 0 && count != seq.size())
                throw validation_error("file holds " + std::to_string(seq.size()) +
                                       " points, config expects " +
                                       std::to_string(count));
            return seq;
        }
        if (count < 1) throw validation_error("count must be >= 1");
        return make_source()->materialize(count);
    }
};

}  // namespace udseq
