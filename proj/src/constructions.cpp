#include "drcalc/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace drcalc {

namespace {

ScaledDecimal truncation_of_rational(const Rational& q, int k) {
  return ScaledDecimal(floor_div(numerator(q) * pow10(k), denominator(q)), k);
}

class EnclosureProducer final : public Producer {
 public:
  EnclosureProducer(EnclosureFn refine, std::string name)
      : refine_(std::move(refine)), name_(std::move(name)) {}

  ScaledDecimal truncation(int k) override {
    if (identified_) return truncation_of_rational(*identified_, k);
    // A previous, deeper probe may already pin this cell.
    if (tight_) {
      if (auto cell = single_cell(*tight_, k)) return ScaledDecimal(*cell, k);
    }
    std::optional<BigInt> boundary;
    for (int probe = 0; probe <= kIdentifyGuard; ++probe) {
      const RationalInterval& e = refined(k + 3 + probe);
      if (auto cell = single_cell(e, k)) return ScaledDecimal(*cell, k);
      // Width <= 10^-(k+3) < one scale-k cell, so exactly one boundary is
      // inside; nesting keeps it the same boundary on every later probe.
      BigInt b = rational_floor(e.hi * Rational(pow10(k)));
      if (boundary && b != *boundary)
        throw ConstructionError(name_ + ": straddled boundary moved between probes");
      boundary = std::move(b);
    }
    // Every probe straddled the same grid point: identify the value as that
    // terminating decimal.
    identified_ = Rational(*boundary, pow10(k));
    return ScaledDecimal(*boundary, k);
  }

  std::string describe() const override { return name_; }

 private:
  static std::optional<BigInt> single_cell(const RationalInterval& e, int k) {
    Rational scale(pow10(k));
    BigInt lo = rational_floor(e.lo * scale);
    BigInt hi = rational_floor(e.hi * scale);
    if (lo == hi) return lo;
    return std::nullopt;
  }

  const RationalInterval& refined(int s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    RationalInterval e = refine_(s);
    if (e.hi - e.lo > Rational(BigInt(1), pow10(s)))
      throw ConstructionError(name_ + ": enclosure wider than 10^-" + std::to_string(s));
    if (tight_) {
      Rational lo = std::max(tight_->lo, e.lo);
      Rational hi = std::min(tight_->hi, e.hi);
      if (lo > hi)
        throw ConstructionError(name_ + ": enclosures disagree (modulus violation) at scale " +
                                std::to_string(s));
      tight_ = RationalInterval(lo, hi);
    } else {
      tight_ = e;
    }
    return cache_.emplace(s, *tight_).first->second;
  }

  EnclosureFn refine_;
  std::string name_;
  std::map<int, RationalInterval> cache_;       // per-scale running intersection
  std::optional<RationalInterval> tight_;       // tightest enclosure seen
  std::optional<Rational> identified_;          // set once a boundary sticks
};

class DedekindProducer final : public Producer {
 public:
  explicit DedekindProducer(CutOracle cut) : cut_(std::move(cut)) {}

  ScaledDecimal truncation(int k) override {
    ensure_prefix(k);
    return truncate(*prefix_, k);
  }

  std::string describe() const override { return "dedekind cut"; }

 private:
  void ensure_prefix(int k) {
    if (!prefix_) {
      BigInt lo = rational_floor(cut_.witness_lo);
      BigInt hi = rational_floor(cut_.witness_hi) + 1;
      if (!cut_.in_lower(Rational(lo)))
        throw ConstructionError("dedekind: integer below the lower witness classified into B");
      if (cut_.in_lower(Rational(hi)))
        throw ConstructionError("dedekind: integer above the upper witness classified into A");
      while (hi - lo > 1) {
        BigInt mid = floor_div(lo + hi, BigInt(2));
        (cut_.in_lower(Rational(mid)) ? lo : hi) = mid;
      }
      prefix_ = ScaledDecimal(lo, 0);  // lo in A, lo + 1 in B
    }
    while (prefix_->scale() < k) {
      int s = prefix_->scale() + 1;
      int d = 0;
      for (int cand = 9; cand >= 1; --cand) {
        ScaledDecimal t = add_exact(*prefix_, ScaledDecimal(cand, s));
        if (cut_.in_lower(t.to_rational())) {
          d = cand;
          break;
        }
      }
      prefix_ = add_exact(*prefix_, ScaledDecimal(d, s));
      nines_ = (d == 9) ? nines_ + 1 : 0;
      if (nines_ >= 64)
        throw ConstructionError(
            "dedekind: 64 consecutive 9s; the cut looks pinned to a terminating decimal, which "
            "the no-smallest-element convention forbids");
    }
  }

  CutOracle cut_;
  std::optional<ScaledDecimal> prefix_;  // in A; prefix + 10^-scale in B
  int nines_ = 0;
};

class GlbProducer final : public Producer {
 public:
  explicit GlbProducer(std::vector<DecimalReal> xs) : xs_(std::move(xs)) {}

  ScaledDecimal truncation(int k) override {
    if (!prefix_) {
      BigInt b0 = xs_[0].a0();
      for (size_t i = 1; i < xs_.size(); ++i) b0 = std::min(b0, xs_[i].a0());
      for (size_t i = 0; i < xs_.size(); ++i)
        if (xs_[i].a0() == b0) survivors_.push_back(i);
      prefix_ = ScaledDecimal(b0, 0);
    }
    while (prefix_->scale() < k) {
      int s = prefix_->scale() + 1;
      Digit m = xs_[survivors_[0]].digit(s);
      for (size_t i = 1; i < survivors_.size(); ++i) m = std::min(m, xs_[survivors_[i]].digit(s));
      std::vector<size_t> next;
      for (size_t i : survivors_)
        if (xs_[i].digit(s) == m) next.push_back(i);
      survivors_ = std::move(next);
      prefix_ = add_exact(*prefix_, ScaledDecimal(m, s));
    }
    return truncate(*prefix_, k);
  }

  long scan_depth() const override {
    long d = 0;
    for (const auto& x : xs_) d = std::max(d, x.scan_depth());
    return d;
  }

  std::string describe() const override {
    return "glb of " + std::to_string(xs_.size()) + " elements";
  }

 private:
  std::vector<DecimalReal> xs_;
  std::vector<size_t> survivors_;  // indices still matching the prefix
  std::optional<ScaledDecimal> prefix_;
};

// Box stream contents for one integer part.
std::vector<int> unary_encoding(const BigInt& n) {
  std::vector<int> out;
  out.push_back(n < 0 ? 1 : 0);
  for (BigInt i = abs(n); i > 0; --i) out.push_back(1);
  out.push_back(0);
  return out;
}

class PairProducer final : public Producer {
 public:
  PairProducer(DecimalReal x, DecimalReal y) : x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int k) override {
    BigInt m = 0;
    for (int p = 1; p <= k; ++p) {
      m *= 10;
      m += digit_of(p);
    }
    return ScaledDecimal(std::move(m), k);
  }

  long scan_depth() const override { return std::max(x_.scan_depth(), y_.scan_depth()); }
  std::string describe() const override {
    return "pair(" + x_.describe() + ", " + y_.describe() + ")";
  }

 private:
  Digit digit_of(int p) {
    switch (p % 3) {
      case 1:
        return x_.digit((p + 2) / 3);
      case 2:
        return y_.digit((p + 1) / 3);
      default:
        return box(p / 3);
    }
  }

  Digit box(int i) {
    if (!boxes_) {
      boxes_ = unary_encoding(x_.a0());
      auto second = unary_encoding(y_.a0());
      boxes_->insert(boxes_->end(), second.begin(), second.end());
    }
    return i <= static_cast<int>(boxes_->size()) ? (*boxes_)[i - 1] : 0;
  }

  DecimalReal x_, y_;
  std::optional<std::vector<int>> boxes_;
};

// Shared view of a paired value during unpairing. Box parsing happens once;
// z's own digit queries are internally synchronized.
struct UnpairState {
  explicit UnpairState(DecimalReal source) : z(std::move(source)) {}

  DecimalReal z;
  std::once_flag parse_once;
  BigInt a0x, a0y;
  long e_boxes = 0;  // box positions consumed by the two encodings

  static constexpr long kMaxEncodingBoxes = 1000;

  Digit box_digit(long i) { return z.digit(static_cast<int>(3 * i)); }

  void ensure_parsed() {
    std::call_once(parse_once, [this] {
      long i = 1;
      a0x = parse_integer(i);
      a0y = parse_integer(i);
      e_boxes = i - 1;
    });
  }

  BigInt parse_integer(long& i) {
    Digit sign = box_digit(i);
    if (sign != 0 && sign != 1)
      throw ConstructionError("cantor_unpair: digit position " + std::to_string(3 * i) +
                              " is not a sign box (0/1)");
    ++i;
    BigInt count = 0;
    for (;; ++i) {
      if (i > kMaxEncodingBoxes)
        throw ConstructionError(
            "cantor_unpair: integer-part encoding not terminated within 1000 boxes");
      Digit d = box_digit(i);
      if (d == 1) {
        ++count;
        continue;
      }
      if (d == 0) {
        ++i;
        break;
      }
      throw ConstructionError("cantor_unpair: digit position " + std::to_string(3 * i) +
                              " is not a unary box (0/1)");
    }
    if (sign == 1 && count == 0)
      throw ConstructionError("cantor_unpair: negative sign box with empty unary run");
    return sign == 1 ? BigInt(-count) : count;
  }

  // Boxes past the two encodings must be 0.
  void validate_boxes_through(long i_max) {
    ensure_parsed();
    for (long i = e_boxes + 1; i <= i_max; ++i)
      if (box_digit(i) != 0)
        throw ConstructionError("cantor_unpair: nonzero box at digit position " +
                                std::to_string(3 * i) + " beyond the integer-part encoding");
  }
};

class UnpairProducer final : public Producer {
 public:
  UnpairProducer(std::shared_ptr<UnpairState> st, bool second)
      : st_(std::move(st)), second_(second) {}

  ScaledDecimal truncation(int k) override {
    st_->ensure_parsed();
    st_->validate_boxes_through(k);
    BigInt m = second_ ? st_->a0y : st_->a0x;
    for (int i = 1; i <= k; ++i) {
      m *= 10;
      m += st_->z.digit(second_ ? 3 * i - 1 : 3 * i - 2);
    }
    return ScaledDecimal(std::move(m), k);
  }

  long scan_depth() const override { return st_->z.scan_depth(); }
  std::string describe() const override {
    return std::string("unpair.") + (second_ ? "second" : "first") + "(" + st_->z.describe() + ")";
  }

 private:
  std::shared_ptr<UnpairState> st_;
  bool second_;
};

}  // namespace

DecimalReal from_enclosures(EnclosureFn refine, std::string name) {
  if (!refine) throw std::invalid_argument("from_enclosures: empty function");
  return DecimalReal::from_producer(
      std::make_unique<EnclosureProducer>(std::move(refine), std::move(name)));
}

DecimalReal from_dedekind(CutOracle cut) {
  if (!cut.in_lower) throw std::invalid_argument("from_dedekind: empty classifier");
  if (!(cut.witness_lo < cut.witness_hi))
    throw ConstructionError("dedekind: witnesses out of order");
  if (!cut.in_lower(cut.witness_lo))
    throw ConstructionError("dedekind: lower witness classified into B");
  if (cut.in_lower(cut.witness_hi))
    throw ConstructionError("dedekind: upper witness classified into A");
  return DecimalReal::from_producer(std::make_unique<DedekindProducer>(std::move(cut)));
}

DecimalReal from_cauchy(CauchyInput c) {
  if (!c.term || !c.modulus) throw std::invalid_argument("from_cauchy: empty term or modulus");
  auto term = std::move(c.term);
  auto modulus = std::move(c.modulus);
  EnclosureFn refine = [term, modulus](int s) {
    int sp = s + 1;  // two-sided radius 10^-(s+1) keeps width within 10^-s
    long n = modulus(sp) + 1;
    Rational q = term(n);
    Rational r(BigInt(1), pow10(sp));
    return RationalInterval(q - r, q + r);
  };
  return from_enclosures(std::move(refine), "cauchy limit");
}

DecimalReal glb_finite(std::vector<DecimalReal> xs) {
  if (xs.empty()) throw std::invalid_argument("glb_finite: empty list");
  if (xs.size() == 1) return xs.front();
  bool all_exact = std::all_of(xs.begin(), xs.end(),
                               [](const DecimalReal& x) { return x.exact_value().has_value(); });
  if (all_exact) {
    Rational best = *xs[0].exact_value();
    for (size_t i = 1; i < xs.size(); ++i) best = std::min(best, *xs[i].exact_value());
    return DecimalReal::from_rational(best);
  }
  return DecimalReal::from_producer(std::make_unique<GlbProducer>(std::move(xs)));
}

DecimalReal glb_prefix(const std::function<DecimalReal(long)>& element, long count) {
  if (!element) throw std::invalid_argument("glb_prefix: empty enumeration");
  if (count < 1) throw std::invalid_argument("glb_prefix: count must be >= 1");
  std::vector<DecimalReal> xs;
  xs.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) xs.push_back(element(i));
  return glb_finite(std::move(xs));
}

DecimalReal cantor_pair(const DecimalReal& x, const DecimalReal& y) {
  return DecimalReal::from_producer(std::make_unique<PairProducer>(x, y));
}

std::pair<DecimalReal, DecimalReal> cantor_unpair(const DecimalReal& z) {
  auto st = std::make_shared<UnpairState>(z);
  return {DecimalReal::from_producer(std::make_unique<UnpairProducer>(st, false)),
          DecimalReal::from_producer(std::make_unique<UnpairProducer>(st, true))};
}

}  // namespace drcalc
