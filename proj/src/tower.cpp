#include "residue/tower.hpp"

#include <algorithm>
#include <sstream>

#include "residue/errors.hpp"

namespace parshin {

namespace {
long clampExact(long v) { return std::min(v, TowerSeries::kExact); }
long sumKE(long ke, long off) {
    return ke >= TowerSeries::kExact ? TowerSeries::kExact : clampExact(ke + off);
}
}  // namespace

TowerSeries::TowerSeries(long gLow, std::vector<LaurentSeries> coeffs, long gKnowEnd)
    : gLow_(gLow), c_(std::move(coeffs)), gKnowEnd_(clampExact(gKnowEnd)) {
    if (gLow_ + static_cast<long>(c_.size()) > gKnowEnd_)
        c_.resize(static_cast<std::size_t>(gKnowEnd_ - gLow_));
    normalize();
}

void TowerSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].isExactZero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        gLow_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().isExactZero()) c_.pop_back();
    if (c_.empty()) {
        gLow_ = gKnowEnd_;
        return;
    }
    // re-pad the interior so the window is dense up to the stored top
    // (coefficients between stored entries are already present by construction)
}

TowerSeries TowerSeries::zeroTo(long gKnowEnd) {
    TowerSeries s;
    s.gKnowEnd_ = clampExact(gKnowEnd);
    s.gLow_ = s.gKnowEnd_;
    return s;
}

TowerSeries TowerSeries::fromLaurent(LaurentSeries c, long gKnowEnd) {
    return monomialG(std::move(c), 0, gKnowEnd);
}

TowerSeries TowerSeries::monomialG(LaurentSeries c, long gOrder, long gKnowEnd) {
    if (c.isExactZero()) return zeroTo(gKnowEnd);
    return TowerSeries(gOrder, {std::move(c)}, gKnowEnd);
}

bool TowerSeries::isZeroToPrecision() const {
    for (const auto& c : c_)
        if (!c.isZeroToPrecision()) return false;
    return true;
}

LaurentSeries TowerSeries::coeffG(long order) const {
    if (order >= gKnowEnd_)
        throw PrecisionLoss("tower coefficient beyond g-precision window");
    if (order < gLow_) return LaurentSeries();
    std::size_t i = static_cast<std::size_t>(order - gLow_);
    return i < c_.size() ? c_[i] : LaurentSeries();
}

TowerSeries TowerSeries::operator-() const {
    TowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TowerSeries TowerSeries::operator+(const TowerSeries& o) const {
    long ke = std::min(gKnowEnd_, o.gKnowEnd_);
    long aLo = c_.empty() ? gKnowEnd_ : gLow_;
    long bLo = o.c_.empty() ? o.gKnowEnd_ : o.gLow_;
    long lo = std::min(aLo, bLo);
    if (lo >= ke) return zeroTo(ke);
    long hi = ke;
    if (ke >= kExact) {
        hi = lo;
        if (!c_.empty()) hi = std::max(hi, gLow_ + static_cast<long>(c_.size()));
        if (!o.c_.empty()) hi = std::max(hi, o.gLow_ + static_cast<long>(o.c_.size()));
        if (hi <= lo) return zeroTo(kExact);
    }
    std::vector<LaurentSeries> v;
    v.reserve(static_cast<std::size_t>(hi - lo));
    for (long n = lo; n < hi; ++n) {
        LaurentSeries a = (n >= gLow_ && n - gLow_ < static_cast<long>(c_.size()))
                              ? c_[static_cast<std::size_t>(n - gLow_)]
                              : LaurentSeries();
        LaurentSeries b = (n >= o.gLow_ && n - o.gLow_ < static_cast<long>(o.c_.size()))
                              ? o.c_[static_cast<std::size_t>(n - o.gLow_)]
                              : LaurentSeries();
        v.push_back(a + b);
    }
    return TowerSeries(lo, std::move(v), ke);
}

TowerSeries TowerSeries::operator-(const TowerSeries& o) const { return *this + (-o); }

TowerSeries TowerSeries::operator*(const TowerSeries& o) const {
    long aVal = c_.empty() ? gKnowEnd_ : gLow_;
    long bVal = o.c_.empty() ? o.gKnowEnd_ : o.gLow_;
    if (c_.empty() || o.c_.empty()) {
        long ke;
        if (c_.empty() && o.c_.empty())
            ke = sumKE(gKnowEnd_, o.gKnowEnd_);
        else if (c_.empty())
            ke = sumKE(gKnowEnd_, bVal);
        else
            ke = sumKE(o.gKnowEnd_, aVal);
        return zeroTo(ke);
    }
    long lo = gLow_ + o.gLow_;
    long ke = std::min(sumKE(gKnowEnd_, o.gLow_), sumKE(o.gKnowEnd_, gLow_));
    long len = std::min(ke, lo + static_cast<long>(c_.size() + o.c_.size()) - 1) - lo;
    if (len < 0) len = 0;
    std::vector<LaurentSeries> v(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            long n = gLow_ + static_cast<long>(i) + o.gLow_ + static_cast<long>(j);
            if (n - lo < static_cast<long>(v.size())) {
                auto& slot = v[static_cast<std::size_t>(n - lo)];
                slot = slot + c_[i] * o.c_[j];
            }
        }
    return TowerSeries(lo, std::move(v), ke);
}

TowerSeries TowerSeries::scaled(const AlgNumber& k) const {
    TowerSeries r = *this;
    for (auto& c : r.c_) c = c.scaled(k);
    return r;
}

TowerSeries TowerSeries::scaledU(const LaurentSeries& c) const {
    TowerSeries r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

TowerSeries TowerSeries::inv(long exactWindow) const {
    if (c_.empty() || c_[0].isZeroToPrecision())
        throw PrecisionLoss("inverting a tower series with indeterminate leading term");
    long window = (gKnowEnd_ >= kExact) ? static_cast<long>(c_.size())
                                        : gKnowEnd_ - gLow_;
    if (gKnowEnd_ >= kExact) window = std::max<long>(window, 1);
    std::vector<LaurentSeries> b(static_cast<std::size_t>(window));
    LaurentSeries leadInv = c_[0].inv(exactWindow);
    b[0] = leadInv;
    for (long k = 1; k < window; ++k) {
        LaurentSeries acc;
        for (long i = 1; i <= k; ++i) {
            LaurentSeries ai = (static_cast<std::size_t>(i) < c_.size())
                                   ? c_[static_cast<std::size_t>(i)]
                                   : LaurentSeries();
            if (!ai.isExactZero()) acc = acc + ai * b[static_cast<std::size_t>(k - i)];
        }
        b[static_cast<std::size_t>(k)] = -(leadInv * acc);
    }
    long ke;
    if (gKnowEnd_ >= kExact)
        ke = (c_.size() == 1) ? kExact : -gLow_ + window;  // a g-monomial inverts exactly
    else
        ke = -gLow_ + (gKnowEnd_ - gLow_);
    return TowerSeries(-gLow_, std::move(b), ke);
}

TowerSeries TowerSeries::shiftedG(long n) const {
    if (c_.empty()) return zeroTo(sumKE(gKnowEnd_, n));
    return TowerSeries(gLow_ + n, c_, sumKE(gKnowEnd_, n));
}

TowerSeries TowerSeries::truncatedG(long newKnowEnd) const {
    long ke = std::min(gKnowEnd_, newKnowEnd);
    std::vector<LaurentSeries> v;
    for (long n = gLow_; n < std::min(ke, gLow_ + static_cast<long>(c_.size())); ++n)
        v.push_back(c_[static_cast<std::size_t>(n - gLow_)]);
    long lo = c_.empty() ? std::min(gKnowEnd_, ke) : gLow_;
    return TowerSeries(lo, std::move(v), ke);
}

TowerSeries TowerSeries::truncatedU(long uKnowEnd) const {
    TowerSeries r = *this;
    for (auto& c : r.c_) c = c.truncated(uKnowEnd);
    return r;
}

TowerSeries TowerSeries::derivU() const {
    TowerSeries r = *this;
    for (auto& c : r.c_) c = c.derivative();
    return r;
}

TowerSeries TowerSeries::derivG() const {
    long ke = gKnowEnd_ >= kExact ? kExact : gKnowEnd_ - 1;
    if (c_.empty()) return zeroTo(ke);
    std::vector<LaurentSeries> v;
    v.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long n = gLow_ + static_cast<long>(i);
        v.push_back(c_[i].scaled(AlgNumber(n)));
    }
    return TowerSeries(gLow_ - 1, std::move(v), ke);
}

std::string TowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isExactZero()) continue;
        long n = gLow_ + static_cast<long>(i);
        if (!first) os << " + ";
        os << "[" << c_[i].str() << "]";
        if (n != 0) os << "*g^" << n;
        first = false;
    }
    if (first) os << "0";
    if (gKnowEnd_ < kExact) os << " + O(g^" << gKnowEnd_ << ")";
    return os.str();
}

static TowerSeries evalAtTower1(const UPoly<AlgNumber>& p, const TowerSeries& x) {
    TowerSeries acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + TowerSeries::fromLaurent(LaurentSeries::constant(p.coeffs()[i]));
    return acc;
}

TowerSeries evalAtTower(const MultiPoly& f, const TowerSeries& S, const TowerSeries& T) {
    auto rec = f.toRecursive();  // outer t, inner s
    TowerSeries acc;
    for (std::size_t j = rec.coeffs().size(); j-- > 0;)
        acc = acc * T + evalAtTower1(rec.coeffs()[j], S);
    return acc;
}

}  // namespace parshin
