#include "tempus/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace tempus {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= kPointTolerance; }

} // namespace

TimeScale TimeScale::from_segments(std::vector<std::pair<double, double>> raw) {
    if (raw.empty()) {
        throw ValidationError("time scale needs at least one segment");
    }
    for (const auto& [lo, hi] : raw) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            throw ValidationError("time scale endpoints must be finite");
        }
        if (lo > hi) {
            throw ValidationError("segment has lo > hi: [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
        }
    }
    std::sort(raw.begin(), raw.end());

    std::vector<Segment> merged;
    merged.push_back({raw.front().first, raw.front().second});
    for (std::size_t i = 1; i < raw.size(); ++i) {
        const auto& [lo, hi] = raw[i];
        Segment& last = merged.back();
        if (lo < last.hi - kPointTolerance) {
            throw ValidationError("overlapping segments near " + std::to_string(lo));
        }
        if (lo <= last.hi + kPointTolerance) {
            // touching: closed sets, so they merge
            last.hi = std::max(last.hi, hi);
        } else {
            merged.push_back({lo, hi});
        }
    }
    return TimeScale(std::move(merged));
}

TimeScale TimeScale::parse(const std::string& text) {
    std::vector<std::pair<double, double>> segments;
    std::size_t item_index = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        std::string item = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                      : next - pos);
        ++item_index;
        std::string compact;
        for (char c : item) {
            if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
        }
        if (compact.empty()) {
            if (next == std::string::npos && item_index == 1) {
                throw ValidationError("time scale text is empty");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
            continue;
        }

        auto parse_number = [&](const std::string& s) {
            const char* begin = s.c_str();
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end != begin + s.size() || s.empty()) {
                throw ValidationError("time scale item " + std::to_string(item_index) +
                                      ": cannot parse number '" + s + "'");
            }
            return v;
        };

        std::size_t dots = compact.find("..");
        if (dots == std::string::npos) {
            double p = parse_number(compact);
            segments.emplace_back(p, p);
        } else {
            double lo = parse_number(compact.substr(0, dots));
            double hi = parse_number(compact.substr(dots + 2));
            if (lo > hi) {
                throw ValidationError("time scale item " + std::to_string(item_index) +
                                      ": lo > hi");
            }
            segments.emplace_back(lo, hi);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (segments.empty()) {
        throw ValidationError("time scale text is empty");
    }
    return from_segments(std::move(segments));
}

std::ptrdiff_t TimeScale::segment_of(double t) const {
    // segments are few (finite union); linear scan is fine
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (t >= segments_[i].lo - kPointTolerance &&
            t <= segments_[i].hi + kPointTolerance) {
            return static_cast<std::ptrdiff_t>(i);
        }
    }
    return -1;
}

bool TimeScale::contains(double t) const { return segment_of(t) >= 0; }

double TimeScale::sigma(double t) const {
    std::ptrdiff_t idx = segment_of(t);
    if (idx < 0) {
        throw DomainError("sigma: point " + std::to_string(t) + " not in time scale");
    }
    const Segment& seg = segments_[static_cast<std::size_t>(idx)];
    if (t < seg.hi - kPointTolerance) {
        return t; // right-dense interior
    }
    // at the segment's right endpoint
    if (static_cast<std::size_t>(idx) + 1 < segments_.size()) {
        return segments_[static_cast<std::size_t>(idx) + 1].lo;
    }
    return seg.hi; // sigma(max) = max
}

double TimeScale::rho(double t) const {
    std::ptrdiff_t idx = segment_of(t);
    if (idx < 0) {
        throw DomainError("rho: point " + std::to_string(t) + " not in time scale");
    }
    const Segment& seg = segments_[static_cast<std::size_t>(idx)];
    if (t > seg.lo + kPointTolerance) {
        return t; // left-dense interior
    }
    if (idx > 0) {
        return segments_[static_cast<std::size_t>(idx) - 1].hi;
    }
    return seg.lo; // rho(min) = min
}

double TimeScale::graininess(double t) const {
    double s = sigma(t);
    return s > t ? s - t : 0.0;
}

PointClass TimeScale::classify(double t) const {
    PointClass pc;
    pc.right_dense = close(sigma(t), t);
    pc.left_dense = close(rho(t), t);
    return pc;
}

Grid TimeScale::make_grid(double a, double horizon, double max_step) const {
    if (!(max_step > 0.0)) {
        throw ValidationError("make_grid: max_step must be positive");
    }
    if (!contains(a)) {
        throw DomainError("make_grid: window start not in time scale");
    }
    if (!contains(horizon)) {
        throw DomainError("make_grid: horizon not in time scale");
    }
    if (!(a < horizon)) {
        throw ValidationError("make_grid: window start must be below horizon");
    }

    std::vector<Grid::Node> nodes;
    for (const Segment& seg : segments_) {
        double lo = std::max(seg.lo, a);
        double hi = std::min(seg.hi, horizon);
        if (lo > hi + kPointTolerance) continue;
        if (close(lo, hi)) {
            nodes.push_back({close(lo, seg.lo) ? seg.lo : lo, 0.0});
            continue;
        }
        auto subdivisions = static_cast<std::size_t>(std::ceil((hi - lo) / max_step - 1e-9));
        subdivisions = std::max<std::size_t>(subdivisions, 1);
        double step = (hi - lo) / static_cast<double>(subdivisions);
        for (std::size_t k = 0; k <= subdivisions; ++k) {
            double t = (k == subdivisions) ? hi : lo + static_cast<double>(k) * step;
            nodes.push_back({t, 0.0});
        }
    }
    if (nodes.size() < 2) {
        throw ValidationError("make_grid: window contains fewer than two points");
    }
    for (Grid::Node& n : nodes) {
        n.mu = graininess(n.t);
    }
    auto parent = std::make_shared<TimeScale>(*this);
    return Grid(std::move(parent), std::move(nodes), a, horizon, max_step);
}

std::string TimeScale::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i) out << "; ";
        if (segments_[i].is_point()) {
            out << segments_[i].lo;
        } else {
            out << segments_[i].lo << ".." << segments_[i].hi;
        }
    }
    return out.str();
}

Grid::Grid(std::shared_ptr<const TimeScale> parent, std::vector<Node> nodes,
           double a, double horizon, double max_step)
    : parent_(std::move(parent)), nodes_(std::move(nodes)),
      a_(a), horizon_(horizon), max_step_(max_step) {
    if (nodes_.size() < 2) {
        throw ValidationError("grid needs at least two nodes");
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (!(nodes_[i - 1].t < nodes_[i].t)) {
            throw ValidationError("grid nodes must be strictly increasing");
        }
    }
    if (!close(nodes_.front().t, a_) || !close(nodes_.back().t, horizon_)) {
        throw ValidationError("grid must start at the window start and end at the horizon");
    }
}

std::size_t Grid::index_of(double t) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t - kPointTolerance,
                               [](const Node& n, double v) { return n.t < v; });
    if (it != nodes_.end() && std::abs(it->t - t) <= kPointTolerance) {
        return static_cast<std::size_t>(it - nodes_.begin());
    }
    throw DomainError("no grid node at t = " + std::to_string(t));
}

bool Grid::purely_discrete() const {
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (nodes_[i].mu <= 0.0) return false;
    }
    return true;
}

GridPtr make_grid(const TimeScale& ts, double a, double horizon, double max_step) {
    return std::make_shared<Grid>(ts.make_grid(a, horizon, max_step));
}

} // namespace tempus
