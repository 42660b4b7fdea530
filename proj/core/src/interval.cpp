#include "intervar/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace intervar {

IntervalModule::IntervalModule(Rational birth, Rational death)
    : birth_(std::move(birth)), death_(std::move(death)) {
    if (!(birth_ < death_)) {
        throw std::invalid_argument("degenerate interval [" + birth_.str() + ", " +
                                    death_.str() + "): birth must be strictly below death");
    }
}

HomWindow HomWindow::window(Rational lo, Rational hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty hom window [lo, hi) needs lo < hi");
    HomWindow w;
    w.empty_ = false;
    w.lo_ = std::move(lo);
    w.hi_ = std::move(hi);
    return w;
}

const Rational& HomWindow::lo() const {
    if (empty_) throw std::logic_error("lo() on the empty hom window");
    return lo_;
}

const Rational& HomWindow::hi() const {
    if (empty_) throw std::logic_error("hi() on the empty hom window");
    return hi_;
}

bool HomWindow::contains(const Rational& x) const {
    return !empty_ && lo_ <= x && x < hi_;
}

bool HomWindow::intersects_from(const Rational& threshold) const {
    return !empty_ && hi_ > threshold;
}

bool operator==(const HomWindow& lhs, const HomWindow& rhs) {
    if (lhs.empty_ || rhs.empty_) return lhs.empty_ == rhs.empty_;
    return lhs.lo_ == rhs.lo_ && lhs.hi_ == rhs.hi_;
}

IntervalModule shift(const IntervalModule& interval, const Rational& e) {
    if (e.is_negative()) throw std::invalid_argument("shift by negative amount " + e.str());
    return IntervalModule(interval.birth() - e, interval.death() - e);
}

bool hom_nonzero(const IntervalModule& src, const IntervalModule& dst) {
    return dst.birth() <= src.birth() && src.birth() < dst.death() && dst.death() <= src.death();
}

HomWindow hom_window(const IntervalModule& src, const IntervalModule& dst) {
    if (dst.death() <= src.birth()) return HomWindow::empty();
    Rational lo = std::max({dst.birth() - src.birth(), dst.death() - src.death(), Rational(0)});
    Rational hi = dst.death() - src.birth();
    return HomWindow::window(std::move(lo), std::move(hi));
}

Rational width(const IntervalModule& interval) {
    return (interval.death() - interval.birth()) / Rational(2);
}

bool projection_nonzero(const IntervalModule& interval, const Rational& e) {
    if (e.is_negative()) throw std::invalid_argument("negative shift " + e.str());
    return e < width(interval);
}

std::ostream& operator<<(std::ostream& os, const IntervalModule& interval) {
    return os << '[' << interval.birth() << ", " << interval.death() << ')';
}

std::ostream& operator<<(std::ostream& os, const HomWindow& window) {
    if (window.is_empty()) return os << "empty";
    return os << '[' << window.lo() << ", " << window.hi() << ')';
}

}  // namespace intervar
