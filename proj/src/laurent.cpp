#include "residue/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "residue/errors.hpp"

namespace parshin {

namespace {
long clampExact(long v) { return std::min(v, LaurentSeries::kExact); }
// knowEnd plus an order offset, treating kExact as infinity
long sumKE(long ke, long off) {
    return ke >= LaurentSeries::kExact ? LaurentSeries::kExact : clampExact(ke + off);
}
}  // namespace

LaurentSeries::LaurentSeries(long low, std::vector<AlgNumber> coeffs, long knowEnd)
    : low_(low), c_(std::move(coeffs)), knowEnd_(clampExact(knowEnd)) {
    if (low_ + static_cast<long>(c_.size()) > knowEnd_)
        c_.resize(static_cast<std::size_t>(knowEnd_ - low_));
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].isZero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().isZero() &&
           low_ + static_cast<long>(c_.size()) == knowEnd_ && false)
        c_.pop_back();  // keep dense window; trailing zeros are information
    if (c_.empty()) low_ = knowEnd_;
    // pad so the window [low, knowEnd) is dense
    if (!c_.empty() && low_ + static_cast<long>(c_.size()) < knowEnd_ && knowEnd_ < kExact)
        c_.resize(static_cast<std::size_t>(knowEnd_ - low_), AlgNumber(0));
}

LaurentSeries LaurentSeries::zeroTo(long knowEnd) {
    LaurentSeries s;
    s.knowEnd_ = clampExact(knowEnd);
    s.low_ = s.knowEnd_;
    return s;
}

LaurentSeries LaurentSeries::monomial(AlgNumber c, long order, long knowEnd) {
    if (c.isZero()) return zeroTo(knowEnd);
    return LaurentSeries(order, {std::move(c)}, knowEnd);
}

AlgNumber LaurentSeries::coeff(long order) const {
    if (order >= knowEnd_)
        throw PrecisionLoss("series coefficient beyond precision window");
    if (order < low_) return AlgNumber(0);
    std::size_t i = static_cast<std::size_t>(order - low_);
    return i < c_.size() ? c_[i] : AlgNumber(0);
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    long ke = std::min(knowEnd_, o.knowEnd_);
    long lo = std::min(valuationLowerBound(), o.valuationLowerBound());
    if (lo >= ke) return zeroTo(ke);
    long hi = ke;
    if (ke >= kExact) {
        // both exact: store only the span actually covered by coefficients
        hi = lo;
        if (!c_.empty()) hi = std::max(hi, low_ + static_cast<long>(c_.size()));
        if (!o.c_.empty()) hi = std::max(hi, o.low_ + static_cast<long>(o.c_.size()));
        if (hi <= lo) return zeroTo(kExact);
    }
    std::vector<AlgNumber> v(static_cast<std::size_t>(hi - lo), AlgNumber(0));
    for (long n = lo; n < hi; ++n) {
        AlgNumber a = (n >= low_ && n - low_ < static_cast<long>(c_.size()))
                          ? c_[static_cast<std::size_t>(n - low_)]
                          : AlgNumber(0);
        AlgNumber b = (n >= o.low_ && n - o.low_ < static_cast<long>(o.c_.size()))
                          ? o.c_[static_cast<std::size_t>(n - o.low_)]
                          : AlgNumber(0);
        v[static_cast<std::size_t>(n - lo)] = a + b;
    }
    return LaurentSeries(lo, std::move(v), ke);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (c_.empty() || o.c_.empty()) {
        // (zero to p) * (val >= v): the product is known zero below p+v
        long ke;
        if (c_.empty() && o.c_.empty())
            ke = sumKE(knowEnd_, o.knowEnd_);
        else if (c_.empty())
            ke = sumKE(knowEnd_, o.low_);
        else
            ke = sumKE(o.knowEnd_, low_);
        return zeroTo(ke);
    }
    long lo = low_ + o.low_;
    long ke = std::min(sumKE(knowEnd_, o.low_), sumKE(o.knowEnd_, low_));
    long len = std::min(ke, lo + static_cast<long>(c_.size() + o.c_.size()) - 1) - lo;
    if (len < 0) len = 0;
    std::vector<AlgNumber> v(static_cast<std::size_t>(len), AlgNumber(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            long n = low_ + static_cast<long>(i) + o.low_ + static_cast<long>(j);
            if (n - lo < static_cast<long>(v.size()))
                v[static_cast<std::size_t>(n - lo)] = v[static_cast<std::size_t>(n - lo)] + c_[i] * o.c_[j];
        }
    return LaurentSeries(lo, std::move(v), ke);
}

LaurentSeries LaurentSeries::scaled(const AlgNumber& k) const {
    if (k.isZero()) return zeroTo(knowEnd_ == kExact ? kExact : knowEnd_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = c * k;
    return r;
}

LaurentSeries LaurentSeries::inv(long exactWindow) const {
    if (c_.empty())
        throw PrecisionLoss("inverting a series that is zero to its precision");
    if (knowEnd_ >= kExact && c_.size() == 1)
        return monomial(c_[0].inv(), -low_);  // exact monomial inverts exactly
    long window = (knowEnd_ >= kExact) ? static_cast<long>(c_.size())
                                       : knowEnd_ - low_;
    // an exact polynomial still inverts only to a finite window; keep it wide
    if (knowEnd_ >= kExact) window = std::max<long>(window, exactWindow);
    std::vector<AlgNumber> b(static_cast<std::size_t>(window), AlgNumber(0));
    AlgNumber leadInv = c_[0].inv();
    b[0] = leadInv;
    for (long k = 1; k < window; ++k) {
        AlgNumber acc(0);
        for (long i = 1; i <= k; ++i) {
            AlgNumber ai = (static_cast<std::size_t>(i) < c_.size()) ? c_[static_cast<std::size_t>(i)] : AlgNumber(0);
            if (!ai.isZero()) acc = acc + ai * b[static_cast<std::size_t>(k - i)];
        }
        b[static_cast<std::size_t>(k)] = -(leadInv * acc);
    }
    long ke = (knowEnd_ >= kExact) ? -low_ + window : -low_ + (knowEnd_ - low_);
    return LaurentSeries(-low_, std::move(b), ke);
}

LaurentSeries LaurentSeries::shifted(long n) const {
    if (c_.empty()) return zeroTo(knowEnd_ >= kExact ? kExact : knowEnd_ + n);
    return LaurentSeries(low_ + n, c_, knowEnd_ >= kExact ? kExact : knowEnd_ + n);
}

LaurentSeries LaurentSeries::truncated(long newKnowEnd) const {
    long ke = std::min(knowEnd_, newKnowEnd);
    if (c_.empty()) return zeroTo(std::min(valuationLowerBound(), ke));
    std::vector<AlgNumber> v;
    for (long n = low_; n < std::min(ke, low_ + static_cast<long>(c_.size())); ++n)
        v.push_back(c_[static_cast<std::size_t>(n - low_)]);
    return LaurentSeries(low_, std::move(v), ke);
}

LaurentSeries LaurentSeries::derivative() const {
    long ke = knowEnd_ >= kExact ? kExact : knowEnd_ - 1;
    if (c_.empty()) return zeroTo(ke);
    std::vector<AlgNumber> v;
    v.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long n = low_ + static_cast<long>(i);
        v.push_back(c_[i] * AlgNumber(n));
    }
    return LaurentSeries(low_ - 1, std::move(v), ke);
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return low_ == o.low_ && knowEnd_ == o.knowEnd_ && (*this - o).isZeroToPrecision();
}

FieldPtr LaurentSeries::coefficientField() const {
    FieldPtr f;
    for (const auto& c : c_) f = commonField(f, c.ext());
    return f;
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isZero()) continue;
        long n = low_ + static_cast<long>(i);
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (n != 0) os << "*" << var << "^" << n;
        first = false;
    }
    if (first) os << "0";
    if (knowEnd_ < kExact) os << " + O(" << var << "^" << knowEnd_ << ")";
    return os.str();
}

LaurentSeries evalAtSeries(const UPoly<AlgNumber>& p, const LaurentSeries& x) {
    LaurentSeries acc = LaurentSeries::zeroTo(LaurentSeries::kExact);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + LaurentSeries::constant(p.coeffs()[i]);
    return acc;
}

LaurentSeries evalAtSeries(const MultiPoly& f, const LaurentSeries& S, const LaurentSeries& T) {
    auto rec = f.toRecursive();  // outer t, inner s
    LaurentSeries acc = LaurentSeries::zeroTo(LaurentSeries::kExact);
    for (std::size_t j = rec.coeffs().size(); j-- > 0;)
        acc = acc * T + evalAtSeries(rec.coeffs()[j], S);
    return acc;
}

}  // namespace parshin
