#include "intervar/classifier.hpp"

#include "intervar/sampling.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace intervar {

const char* class_name(VarietyClass cls) {
    switch (cls) {
        case VarietyClass::Empty: return "Empty";
        case VarietyClass::Origin: return "Origin";
        case VarietyClass::KAxis: return "KAxis";
        case VarietyClass::LAxis: return "LAxis";
        case VarietyClass::Hyperbola: return "Hyperbola";
        case VarietyClass::Plane: return "Plane";
    }
    return "?";
}

bool is_axis(VarietyClass cls) {
    return cls == VarietyClass::KAxis || cls == VarietyClass::LAxis;
}

VarietyClass classify(const IntervalModule& m, const IntervalModule& n, const Rational& e) {
    if (e.is_negative()) throw std::invalid_argument("negative epsilon " + e.str());
    const bool k_free = hom_window(m, n).contains(e);
    const bool l_free = hom_window(n, m).contains(e);
    const Rational two_e = e * Rational(2);
    const bool constrained = hom_window(m, m).contains(two_e) || hom_window(n, n).contains(two_e);
    if (constrained) return k_free && l_free ? VarietyClass::Hyperbola : VarietyClass::Empty;
    if (k_free && l_free) return VarietyClass::Plane;
    if (k_free) return VarietyClass::KAxis;
    if (l_free) return VarietyClass::LAxis;
    return VarietyClass::Origin;
}

namespace {

std::vector<Rational> candidate_points(const IntervalModule& m, const IntervalModule& n) {
    std::vector<Rational> points{Rational(0)};
    for (const HomWindow& w : {hom_window(m, n), hom_window(n, m)}) {
        if (w.is_empty()) continue;
        points.push_back(w.lo());
        points.push_back(w.hi());
    }
    points.push_back(width(m));
    points.push_back(width(n));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace

Progression progression(const IntervalModule& m, const IntervalModule& n) {
    const std::vector<Rational> points = candidate_points(m, n);
    Progression out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const VarietyClass cls = classify(m, n, points[i]);
        // The class is constant between consecutive candidates.
        assert(i + 1 >= points.size() ||
               classify(m, n, midpoint(points[i], points[i + 1])) == cls);
        if (out.segments.empty() || out.segments.back().cls != cls) {
            out.segments.push_back({points[i], cls});
            if (out.segments.size() > 1) out.breakpoints.push_back(points[i]);
        }
    }
    assert(out.segments.back().cls == VarietyClass::Origin);
    return out;
}

std::vector<Rational> breakpoints(const IntervalModule& m, const IntervalModule& n) {
    return progression(m, n).breakpoints;
}

VarietyClass Progression::class_at(const Rational& e) const {
    VarietyClass cls = segments.front().cls;
    for (const Segment& seg : segments) {
        if (seg.start > e) break;
        cls = seg.cls;
    }
    return cls;
}

std::vector<VarietyClass> Progression::nonempty_classes() const {
    std::vector<VarietyClass> out;
    for (const Segment& seg : segments) {
        if (seg.cls != VarietyClass::Empty) out.push_back(seg.cls);
    }
    return out;
}

const Rational& Progression::first_nonempty_start() const {
    for (const Segment& seg : segments) {
        if (seg.cls != VarietyClass::Empty) return seg.start;
    }
    throw std::logic_error("progression with no nonempty segment");
}

std::vector<VarietyClass> predicted_progression(const IntervalModule& m, const IntervalModule& n) {
    const HomLifeSummary life = hom_life(m, n);
    const auto surviving_axis = [&]() {
        const bool k_alive = hom_window(m, n).intersects_from(life.distance);
        const bool l_alive = hom_window(n, m).intersects_from(life.distance);
        if (k_alive != l_alive) return k_alive ? VarietyClass::KAxis : VarietyClass::LAxis;
        // Not reachable when the single-surviving-hom lemma holds; fall back
        // to the longer-lived window so the caller still gets a sequence.
        return life.sigma_prime >= life.tau_prime ? VarietyClass::KAxis : VarietyClass::LAxis;
    };
    if (life.m1 > life.m2) {
        return {VarietyClass::Origin, surviving_axis(), VarietyClass::Origin};
    }
    if (life.m1 == life.m2) {
        return {surviving_axis(), VarietyClass::Origin};
    }
    const Rational& r = std::min(life.sigma_prime, life.tau_prime);
    const Rational& s = std::max(life.sigma_prime, life.tau_prime);
    if (r < s) {
        const VarietyClass axis =
            life.sigma_prime > life.tau_prime ? VarietyClass::KAxis : VarietyClass::LAxis;
        return {VarietyClass::Hyperbola, VarietyClass::Plane, axis, VarietyClass::Origin};
    }
    return {VarietyClass::Hyperbola, VarietyClass::Plane, VarietyClass::Origin};
}

namespace {

VarietyClass fold_axis(VarietyClass cls) {
    return cls == VarietyClass::LAxis ? VarietyClass::KAxis : cls;
}

bool same_up_to_axis(const std::vector<VarietyClass>& lhs, const std::vector<VarietyClass>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (fold_axis(lhs[i]) != fold_axis(rhs[i])) return false;
    }
    return true;
}

std::string class_list(const std::vector<VarietyClass>& classes) {
    std::string out;
    for (VarietyClass cls : classes) {
        if (!out.empty()) out += ", ";
        out += class_name(cls);
    }
    return out;
}

void check_sample(std::uint64_t index, const IntervalModule& m, const IntervalModule& n,
                  std::vector<TheoremDiscrepancy>& sink) {
    const auto report = [&](const std::string& detail) {
        sink.push_back({index, m, n, detail});
    };
    const HomLifeSummary life = hom_life(m, n);
    const Progression prog = progression(m, n);

    for (std::size_t i = 1; i < prog.segments.size(); ++i) {
        if (prog.segments[i].cls == VarietyClass::Empty) {
            report("Empty segment after the start of the timeline");
            return;
        }
    }

    const std::vector<VarietyClass> actual = prog.nonempty_classes();
    const std::vector<VarietyClass> predicted = predicted_progression(m, n);
    if (!same_up_to_axis(actual, predicted)) {
        report("timeline [" + class_list(actual) + "] != predicted [" + class_list(predicted) + "]");
        return;
    }

    const VarietyClass first = actual.front();
    const bool trichotomy_ok =
        (life.m1 > life.m2 && first == VarietyClass::Origin) ||
        (life.m1 == life.m2 && is_axis(first)) ||
        (life.m1 < life.m2 && first == VarietyClass::Hyperbola);
    if (!trichotomy_ok) {
        std::ostringstream msg;
        msg << "first nonempty class " << class_name(first) << " contradicts m1 = " << life.m1
            << ", m2 = " << life.m2;
        report(msg.str());
        return;
    }

    if (prog.first_nonempty_start() != life.distance) {
        std::ostringstream msg;
        msg << "variety turns nonempty at " << prog.first_nonempty_start()
            << " but the distance is " << life.distance;
        report(msg.str());
    }
}

}  // namespace

TheoremReport verify_theorem(std::uint64_t samples, std::uint64_t seed, int threads) {
    TheoremReport report;
    report.samples = samples;
    if (samples == 0) return report;

    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
    }
    threads = std::clamp(threads, 1, 8);
    if (samples < 512) threads = 1;

    const std::uint64_t chunk = (samples + threads - 1) / threads;
    std::vector<std::vector<TheoremDiscrepancy>> found(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t begin = t * chunk;
        const std::uint64_t end = std::min(samples, begin + chunk);
        workers.emplace_back([&, t, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i) {
                SampleRng rng = SampleRng::for_index(seed, i);
                const IntervalModule m = rng.interval();
                const IntervalModule n = rng.interval();
                check_sample(i, m, n, found[t]);
            }
        });
    }
    for (std::thread& w : workers) w.join();
    for (std::vector<TheoremDiscrepancy>& part : found) {
        report.discrepancies.insert(report.discrepancies.end(),
                                    std::make_move_iterator(part.begin()),
                                    std::make_move_iterator(part.end()));
    }
    return report;
}

}  // namespace intervar
