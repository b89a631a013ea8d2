#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csurg/pd.hpp"

namespace csurg::front {

// Event word for a front projection, swept left to right. Strand positions
// are 1-based, counted bottom to top at the slice where the event happens.
enum class EventKind { LeftCusp, RightCusp, Cross };

struct FrontEvent {
    EventKind kind;
    int pos;
    bool operator==(const FrontEvent&) const = default;
};

inline FrontEvent lcusp(int i) { return {EventKind::LeftCusp, i}; }
inline FrontEvent rcusp(int i) { return {EventKind::RightCusp, i}; }
inline FrontEvent cross(int i) { return {EventKind::Cross, i}; }

struct FrontError : std::runtime_error {
    enum class Code { StrandCountMismatch, OpenEnds, BadInput };
    Code code;
    FrontError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// One crossing of the validated front. The ascending strand (lower before
// the event) is the under strand: with dz - y dx and y projected out, the
// strand of lesser slope is in front.
struct CrossingInfo {
    int event_index;
    int under_arc;  // ascending
    int over_arc;   // descending
};

struct CuspInfo {
    int event_index;
    bool left;
    int lower_arc, upper_arc;
};

struct ClassicalInvariants {
    long long tb = 0;
    long long rot = 0;  // absolute value (public convention)
    long long rot_signed = 0;
    long long writhe = 0;
    long long cusps_up = 0, cusps_down = 0;
};

class LegendrianFront {
public:
    const std::vector<FrontEvent>& events() const { return events_; }
    const std::vector<int>& orientation() const { return orientation_; }
    int component_count() const { return int(orientation_.size()); }
    int arc_count() const { return arc_count_; }
    int component_of_arc(int arc) const { return arc_component_[arc]; }
    int arc_direction(int arc) const { return arc_dir_[arc]; }  // +1 right, -1 left
    const std::vector<CrossingInfo>& crossings() const { return crossings_; }
    const std::vector<CuspInfo>& cusps() const { return cusps_; }

    // Signed crossing count between components a and b (twice their linking
    // number), or twice the writhe when a == b.
    long long signed_crossings(int a, int b) const;
    long long linking(int a, int b) const;

    friend LegendrianFront validate_front(const std::vector<FrontEvent>&, std::vector<int>);

private:
    std::vector<FrontEvent> events_;
    std::vector<int> orientation_;
    int arc_count_ = 0;
    std::vector<int> arc_component_;
    std::vector<int> arc_dir_;
    std::vector<CrossingInfo> crossings_;
    std::vector<CuspInfo> cusps_;
};

// Checks the event word, decomposes into components and orients them.
// orientation may be empty (all +1) or have one entry per component.
LegendrianFront validate_front(const std::vector<FrontEvent>& events,
                               std::vector<int> orientation = {});

// tb, rot, writhe of one component (or the whole front when component = -1
// and the front is a knot).
ClassicalInvariants classical_invariants(const LegendrianFront& f, int component = 0);

// Inserts a zigzag on the strand occupying slot `slot` just before event
// `at_event` (slot/at_event of the *validated* sweep). sign +1 raises the
// signed rotation number by one, sign -1 lowers it; tb drops by one either way.
LegendrianFront stabilize(const LegendrianFront& f, int sign);
LegendrianFront stabilize_at(const LegendrianFront& f, int sign, int at_event, int slot);

// n parallel Reeb copies of a one-component front; every copy keeps the
// original classical invariants and any two copies link tb(original) times.
LegendrianFront reeb_pushoff(const LegendrianFront& f, int n);

// Annular pattern on `strands` strands in the solid-torus model. The event
// word uses positions 1..strands and must return the strand count to
// `strands`. Twist regions of the two cable patterns are built-in words.
struct PatternWord {
    int strands = 1;
    std::vector<FrontEvent> events;  // relative positions
};

// The cable patterns: sign -1 inserts the clasp with two cusps (the strand
// leaves the bottom of the band, wraps, and re-enters on top), sign +1 the
// cusp-free shift. Both cyclically permute the strands.
PatternWord cable_pattern(int sign, int n);

// Satellite of a one-component companion: n-copy with the pattern word
// inserted along the companion. insertion_event picks the slice (index into
// the companion's event word; the pattern goes in front of that event);
// the slice must carry at least one rightward-running companion strand.
LegendrianFront legendrian_satellite(const LegendrianFront& companion, const PatternWord& pattern,
                                     int insertion_event = 1);

// Two-component front J (cable) together with the companion core, for
// linking-number checks: lk(J, C) = sign + n * tb(C).
LegendrianFront cable_link(int sign, int n, const LegendrianFront& companion,
                           int insertion_event = 1);

ClassicalInvariants cable_invariants(int sign, int n, const LegendrianFront& companion);

// Smooth planar diagram of the front: cusps smoothed, crossings resolved by
// the slope convention.
pd::PDCode front_to_pd(const LegendrianFront& f);

// Local Legendrian front rewrites (the six front moves: triple point in two
// chiralities, a cusp passing through a transverse strand on either side,
// and the swallowtail in its two vertical mirrors). Each returns the
// rewritten word, or nullopt when the pattern does not apply at `at`.
std::optional<std::vector<FrontEvent>> move_r3(const std::vector<FrontEvent>& ev, int at);
// cusp through the strand below: [lcusp(i+1)] <-> [lcusp(i), cross(i+1), cross(i)]
std::optional<std::vector<FrontEvent>> move_lcusp_down(const std::vector<FrontEvent>& ev, int at);
std::optional<std::vector<FrontEvent>> move_lcusp_down_inv(const std::vector<FrontEvent>& ev,
                                                           int at);
// cusp through the strand above: [lcusp(i)] <-> [lcusp(i+1), cross(i), cross(i+1)]
std::optional<std::vector<FrontEvent>> move_lcusp_up(const std::vector<FrontEvent>& ev, int at);
// [rcusp(i)] (strand above) <-> [cross(i+1), cross(i), rcusp(i+1)]
std::optional<std::vector<FrontEvent>> move_rcusp_up(const std::vector<FrontEvent>& ev, int at);
// [rcusp(i+1)] (strand below) <-> [cross(i), cross(i+1), rcusp(i)]
std::optional<std::vector<FrontEvent>> move_rcusp_down(const std::vector<FrontEvent>& ev, int at);
// swallowtail wiggle on the strand at `slot`: inserts
// [lcusp(slot+1), cross(slot), rcusp(slot+1)] (or the mirrored word)
std::optional<std::vector<FrontEvent>> move_swallowtail_birth(const std::vector<FrontEvent>& ev,
                                                              int at, int slot, bool pair_above);
std::optional<std::vector<FrontEvent>> move_swallowtail_death(const std::vector<FrontEvent>& ev,
                                                              int at);

// Building blocks shared with the kirby module.
namespace detail {

// Sweep-expansion of selected components into parallel copies. width[c] = k
// replaces every strand of component c by k parallel strands.
std::vector<FrontEvent> expand_components(const LegendrianFront& f, const std::vector<int>& width);

// As above, but also inserts `insert` (positions relative to the expanded
// block of `insert_component`'s strand) just before original event
// `insert_event`. The block base is resolved at emission time.
struct InsertSpec {
    int component = 0;
    int event_index = 0;           // insert before this original event
    int below_component = -1;      // if >= 0, require this component's strand
                                   // directly below the block (slide sites)
    std::vector<FrontEvent> word;  // relative positions (0 = strand below)
};
std::vector<FrontEvent> expand_components_with_insert(const LegendrianFront& f,
                                                      const std::vector<int>& width,
                                                      const InsertSpec& insert);

}  // namespace detail

}  // namespace csurg::front
