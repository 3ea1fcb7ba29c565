#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tempus/errors.hpp"

namespace tempus {

/// Absolute tolerance used when matching a real against a time-scale point
/// or grid node.
inline constexpr double kPointTolerance = 1e-12;

/// Classification of a point relative to its neighbors in the time scale.
/// The minimum is left-dense and the maximum right-dense by convention,
/// matching sigma(max) = max and rho(min) = min.
struct PointClass {
    bool right_dense = false;
    bool left_dense = false;

    bool right_scattered() const { return !right_dense; }
    bool left_scattered() const { return !left_dense; }
};

class Grid;

/// A time scale restricted to a finite union of disjoint closed bounded
/// intervals. Isolated points are stored as degenerate segments (lo == hi).
/// Immutable after construction; safe to share across threads.
class TimeScale {
public:
    struct Segment {
        double lo;
        double hi;

        bool is_point() const { return lo == hi; }
    };

    /// Builds a normalized time scale: segments are sorted and touching
    /// segments merged. Throws ValidationError on empty input, non-finite or
    /// inverted endpoints, or overlapping segments.
    static TimeScale from_segments(std::vector<std::pair<double, double>> segments);

    /// Parses the text encoding: semicolon-separated items, each "lo..hi"
    /// or a single point "p". Whitespace is ignored. Errors report the
    /// 1-based item index.
    static TimeScale parse(const std::string& text);

    const std::vector<Segment>& segments() const { return segments_; }
    double min() const { return segments_.front().lo; }
    double max() const { return segments_.back().hi; }

    bool contains(double t) const;

    /// Forward jump: inf{s in T : s > t}, with sigma(max) = max.
    /// Throws DomainError if t is not in the time scale.
    double sigma(double t) const;

    /// Backward jump: sup{s in T : s < t}, with rho(min) = min.
    double rho(double t) const;

    /// Graininess mu(t) = sigma(t) - t.
    double graininess(double t) const;

    PointClass classify(double t) const;

    /// Samples the window [a, horizon]: every segment endpoint and isolated
    /// point inside the window becomes a node, and continuous stretches are
    /// subdivided uniformly with spacing <= max_step.
    Grid make_grid(double a, double horizon, double max_step) const;

    std::string to_string() const;

private:
    explicit TimeScale(std::vector<Segment> segments)
        : segments_(std::move(segments)) {}

    /// Index of the segment containing t (within kPointTolerance), or -1.
    std::ptrdiff_t segment_of(double t) const;

    std::vector<Segment> segments_;
};

/// Ordered sample nodes over a bounded window of a TimeScale. Each node
/// carries the time-scale graininess mu(t): positive exactly at
/// right-scattered nodes, independent of the quadrature subdivision.
/// Immutable after construction.
class Grid {
public:
    struct Node {
        double t;
        double mu;
    };

    Grid(std::shared_ptr<const TimeScale> parent, std::vector<Node> nodes,
         double a, double horizon, double max_step);

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double t(std::size_t i) const { return nodes_[i].t; }
    double mu(std::size_t i) const { return nodes_[i].mu; }
    double a() const { return a_; }
    double horizon() const { return horizon_; }
    double max_step() const { return max_step_; }
    const TimeScale& parent() const { return *parent_; }

    /// Node index whose t matches the argument within kPointTolerance.
    /// Throws DomainError if no node matches.
    std::size_t index_of(double t) const;

    /// True if every node before the last is right-scattered.
    bool purely_discrete() const;

private:
    std::shared_ptr<const TimeScale> parent_;
    std::vector<Node> nodes_;
    double a_;
    double horizon_;
    double max_step_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Convenience: builds the time scale, then the grid, sharing ownership.
GridPtr make_grid(const TimeScale& ts, double a, double horizon, double max_step);

} // namespace tempus
