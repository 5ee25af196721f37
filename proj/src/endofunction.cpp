#include "fuzztop/endofunction.hpp"

#include <algorithm>
#include <set>

#include "fuzztop/errors.hpp"

namespace fuzztop {

Carrier::Carrier(std::size_t size) : size_(size) {
    if (size == 0) {
        throw InputError("carrier must be nonempty");
    }
}

Carrier::Carrier(std::vector<std::string> labels) : size_(labels.size()) {
    if (labels.empty()) {
        throw InputError("carrier must be nonempty");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
        throw InputError("carrier labels must be pairwise distinct");
    }
    labels_ = std::move(labels);
}

std::string Carrier::label(std::size_t x) const {
    return labels_ ? (*labels_)[x] : std::to_string(x);
}

EndoFunction::EndoFunction(Carrier carrier, std::vector<std::size_t> map)
    : carrier_(std::move(carrier)), map_(std::move(map)) {
    if (map_.size() != carrier_.size()) {
        throw InputError("map has " + std::to_string(map_.size()) + " entries for a carrier of size " +
                         std::to_string(carrier_.size()));
    }
    for (std::size_t x = 0; x < map_.size(); ++x) {
        if (map_[x] >= map_.size()) {
            throw InputError("f(" + std::to_string(x) + ") = " + std::to_string(map_[x]) +
                             " lies outside the carrier");
        }
    }
}

namespace {

Carrier carrier_for(const std::vector<std::size_t>& map) { return Carrier(map.size()); }

}  // namespace

EndoFunction::EndoFunction(std::vector<std::size_t> map) : EndoFunction(carrier_for(map), map) {}

std::string EndoFunction::str() const {
    std::string out = "[";
    for (std::size_t x = 0; x < map_.size(); ++x) {
        if (x) out += ",";
        out += std::to_string(map_[x]);
    }
    return out + "]";
}

bool FunctionProfile::is_periodic(std::size_t x) const {
    return std::binary_search(periodic.begin(), periodic.end(), x);
}

FunctionProfile profile(const EndoFunction& f) {
    const auto n = f.size();
    FunctionProfile p;
    std::vector<bool> hit(n, false);
    for (auto y : f.map()) hit[y] = true;
    p.onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    // A self-map of a finite set is injective exactly when it is onto, but
    // both are computed directly.
    std::set<std::size_t> image(f.map().begin(), f.map().end());
    p.injective = image.size() == n;

    for (std::size_t x = 0; x < n; ++x) {
        auto y = x;
        for (std::size_t m = 1; m <= n; ++m) {
            y = f(y);
            if (y == x) {
                p.periodic.push_back(x);
                break;
            }
        }
    }
    p.all_periodic = p.periodic.size() == n;
    return p;
}

JPartition j_partition(const EndoFunction& f) {
    const auto n = f.size();
    JPartition jp;
    jp.index_of.assign(n, 0);

    std::vector<bool> current(n, true);  // f^0(X)
    for (std::size_t step = 1; step <= n; ++step) {
        std::vector<bool> next(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            if (current[x]) next[f(x)] = true;
        }
        if (next == current) break;
        std::vector<std::size_t> shell;
        for (std::size_t x = 0; x < n; ++x) {
            if (current[x] && !next[x]) {
                shell.push_back(x);
                jp.index_of[x] = step;
            }
        }
        jp.shells.push_back(std::move(shell));
        current = std::move(next);
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (current[x]) jp.core.push_back(x);
    }
    return jp;
}

bool OrbitData::on_orbit(std::size_t x) const {
    return std::find(orbit.begin(), orbit.end(), x) != orbit.end();
}

OrbitData orbit_data(const EndoFunction& f, std::size_t x0, unsigned k) {
    if (!profile(f).injective) {
        throw PreconditionError(
            "the orbit topology needs a one-to-one map; f = " + f.str() + " is not injective");
    }
    if (x0 >= f.size()) {
        throw InputError("base point x0 = " + std::to_string(x0) + " outside carrier");
    }
    if (k == 0) {
        throw InputError("parameter k must be a positive integer");
    }
    OrbitData o;
    o.carrier_size = f.size();
    o.x0 = x0;
    o.k = k;
    auto y = x0;
    do {
        o.orbit.push_back(y);
        y = f(y);
    } while (y != x0);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (!o.on_orbit(x)) o.off_orbit.push_back(x);
    }
    return o;
}

std::vector<FuzzySet> Tau3Basis::members() const {
    std::vector<FuzzySet> out{c};
    out.insert(out.end(), cn.begin(), cn.end());
    return out;
}

Tau3Basis tau3_basis(const OrbitData& o) {
    Tau3Basis b{FuzzySet::indicator(o.carrier_size, o.off_orbit), {}};
    const Grade low(1, o.k);
    for (std::size_t n = 0; n < o.length(); ++n) {
        std::vector<Grade> grades(o.carrier_size);
        for (auto y : o.orbit) grades[y] = low;
        grades[o.orbit[n]] = Grade::one();
        b.cn.emplace_back(std::move(grades));
    }
    return b;
}

}  // namespace fuzztop
