#include "qrr/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qrr/qfunctions.hpp"

namespace qrr::partitions {

namespace {

void descend(int remaining, int cap, Partition& stack,
             const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(stack);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        stack.push_back(part);
        descend(remaining - part, part, stack, visit);
        stack.pop_back();
    }
}

}  // namespace

void for_each_partition(int weight, const std::function<void(const Partition&)>& visit) {
    if (weight < 0) {
        throw std::invalid_argument("for_each_partition: negative weight");
    }
    Partition stack;
    descend(weight, weight, stack, visit);
}

std::int64_t count_partitions(int n, int parts, int largest) {
    if (n < 0 || parts < 0 || largest < 0) {
        throw std::invalid_argument("count_partitions: negative argument");
    }
    std::int64_t count = 0;
    for_each_partition(n, [&](const Partition& p) {
        int got_largest = p.empty() ? 0 : p.front();
        if (static_cast<int>(p.size()) == parts && got_largest == largest) {
            ++count;
        }
    });
    return count;
}

std::int64_t count_all_partitions(int n) {
    std::int64_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    return count;
}

DurfeeClass classify_durfee(const Partition& p, int s) {
    if (s < 1) {
        throw std::invalid_argument("classify_durfee: s must be positive");
    }
    auto part = [&](int i) {  // 1-based, 0 past the end
        return (i >= 1 && i <= static_cast<int>(p.size())) ? p[static_cast<size_t>(i) - 1] : 0;
    };
    std::vector<DurfeeClass> found;
    int max_n = static_cast<int>(p.size());
    for (int n = 0; n <= max_n; ++n) {
        /* (n, 0): rows 1..n contain the n x sn rectangle and the rows below
         * are no wider than it. n = 0 admits only the empty partition. */
        bool rect = n == 0 || part(n) >= s * n;
        if (rect && part(n + 1) <= s * n) {
            found.push_back({n, 0});
        }
        /* (n, k >= 1): row n+1 is exactly as wide as the (n+1) x (sn+k)
         * rectangle, so nothing extends it to the right. */
        int width = part(n + 1);
        if (width > s * n && width < s * (n + 1)) {
            found.push_back({n, width - s * n});
        }
    }
    if (found.size() != 1) {
        std::ostringstream os;
        os << "classify_durfee: " << found.size() << " classes fit a partition of weight ";
        int w = 0;
        for (int x : p) w += x;
        os << w;
        throw std::logic_error(os.str());
    }
    return found.front();
}

OracleReport verify_thm31_coefficients(int s, int max_weight) {
    OracleReport report{"thm31-coefficients(s=" + std::to_string(s) + ")", true, 0, ""};
    BuildCtx ctx(1, max_weight);
    const Monomial aq{1, 1, 0, 1};
    const Monomial bq{1, 0, 1, 1};
    const Monomial q{1, 0, 0, 1};

    /* First form: sum_n a^n b^n q^(n^2) / ((aq)_n (bq)_n). */
    QSeries first = ctx.zero();
    for (std::int64_t n = 0; n * n <= max_weight; ++n) {
        QSeries term = mul(ctx.inv_poch_finite(aq, 1, n), ctx.inv_poch_finite(bq, 1, n));
        first = add(first, term.times_monomial(
                               CoeffPoly::monomial(1, static_cast<int>(n), static_cast<int>(n)),
                               n * n));
    }
    /* Second form: the Durfee-rectangle dissection, classes k = 0..s-1. */
    QSeries second = ctx.zero();
    for (int k = 0; k < s; ++k) {
        int j = k == 0 ? 0 : 1;
        for_each_term(0, ctx.prec(),
                      [&](std::int64_t n) { return (s * n + k) * (n + j); },
                      [&](std::int64_t n) {
                          QSeries term = mul(ctx.inv_poch_finite(aq, 1, n),
                                             ctx.inv_poch_finite(bq, 1, s * n + k));
                          second = add(second,
                                       term.times_monomial(
                                           CoeffPoly::monomial(1, static_cast<int>(s * n + k),
                                                               static_cast<int>(n + j)),
                                           (s * n + k) * (n + j)));
                      });
    }
    /* Third form: 1 + b sum_{n>=1} a^n q^n / (bq)_n. */
    QSeries third = ctx.one();
    for (std::int64_t n = 1; n <= max_weight; ++n) {
        third = add(third, ctx.inv_poch_finite(bq, 1, n).times_monomial(
                               CoeffPoly::monomial(1, static_cast<int>(n), 1), n));
    }

    for (int w = 0; w <= max_weight && report.pass; ++w) {
        std::map<std::pair<int, int>, std::int64_t> counts;  // (parts, largest) -> count
        for_each_partition(w, [&](const Partition& p) {
            int largest = p.empty() ? 0 : p.front();
            ++counts[{static_cast<int>(p.size()), largest}];
        });
        /* Every stored monomial of every form must match the count, and every
         * nonzero count must be present in every form. */
        for (const QSeries* series : {&first, &second, &third}) {
            for (const auto& [key, value] : series->coeff(w).terms()) {
                ++report.cases_checked;
                std::int64_t want = 0;
                if (auto it = counts.find({key.b, key.a}); it != counts.end()) {
                    want = it->second;
                }
                if (value != want) {
                    report.pass = false;
                    std::ostringstream os;
                    os << "coefficient a^" << key.a << " b^" << key.b << " q^" << w << " is "
                       << value.str() << ", enumeration gives " << want;
                    report.detail = os.str();
                    break;
                }
            }
            if (!report.pass) break;
            for (const auto& [mr, count] : counts) {
                ++report.cases_checked;
                if (series->coefficient(w, mr.second, mr.first) != count) {
                    report.pass = false;
                    std::ostringstream os;
                    os << "missing coefficient a^" << mr.second << " b^" << mr.first << " q^"
                       << w << " (enumeration gives " << count << ")";
                    report.detail = os.str();
                    break;
                }
            }
            if (!report.pass) break;
        }
    }
    return report;
}

OracleReport verify_durfee_rectangle(int s, int max_n) {
    OracleReport report{"durfee-rectangle(s=" + std::to_string(s) + ")", true, 0, ""};
    BuildCtx ctx(1, max_n);
    const Monomial aq{1, 1, 0, 1};
    const Monomial bq{1, 0, 1, 1};

    /* counts[(n,k)][(parts, largest, weight)] via classification */
    std::map<std::pair<int, int>, std::map<std::tuple<int, int, int>, std::int64_t>> counts;
    for (int w = 0; w <= max_n; ++w) {
        for_each_partition(w, [&](const Partition& p) {
            DurfeeClass c = classify_durfee(p, s);  // throws unless exactly one class fits
            int largest = p.empty() ? 0 : p.front();
            ++counts[{c.n, c.k}][{static_cast<int>(p.size()), largest, w}];
            ++report.cases_checked;
        });
    }

    /* Per-class generating function: a^(sn+k) b^(n+j) q^((sn+k)(n+j))
     * / ((aq)_n (bq)_{sn+k}) with j = [k != 0]. */
    for (int n = 0; s * n <= max_n + s; ++n) {
        for (int k = 0; k < s; ++k) {
            int j = k == 0 ? 0 : 1;
            std::int64_t base = static_cast<std::int64_t>(s * n + k) * (n + j);
            if (base > max_n) continue;
            QSeries gen = mul(ctx.inv_poch_finite(aq, 1, n),
                              ctx.inv_poch_finite(bq, 1, s * n + k))
                              .times_monomial(CoeffPoly::monomial(1, s * n + k, n + j), base);
            auto& bucket = counts[{n, k}];
            for (int w = 0; w <= max_n; ++w) {
                for (const auto& [key, value] : gen.coeff(w).terms()) {
                    std::int64_t want = 0;
                    if (auto it = bucket.find({key.b, key.a, w}); it != bucket.end()) {
                        want = it->second;
                        bucket.erase(it);
                    }
                    if (value != want) {
                        report.pass = false;
                        std::ostringstream os;
                        os << "class (" << n << "," << k << "): coefficient a^" << key.a
                           << " b^" << key.b << " q^" << w << " is " << value.str()
                           << ", classification gives " << want;
                        report.detail = os.str();
                        return report;
                    }
                }
            }
            if (!bucket.empty()) {
                report.pass = false;
                report.detail = "class (" + std::to_string(n) + "," + std::to_string(k) +
                                "): classification found partitions the series lacks";
                return report;
            }
            counts.erase({n, k});
        }
    }
    if (!counts.empty()) {
        report.pass = false;
        report.detail = "classification produced classes outside the generating-function range";
    }
    return report;
}

OracleReport verify_a179080(int max_weight) {
    OracleReport report{"a179080", true, 0, ""};
    BuildCtx ctx(1, max_weight);
    /* n(n-1)/2 has no integer-coefficient quadratic form, so loop directly. */
    QSeries series = ctx.zero();
    const Monomial q2{1, 0, 0, 2};
    for (std::int64_t n = 1; n * (n - 1) / 2 <= max_weight; ++n) {
        series = add(series, ctx.inv_poch_finite(q2, 2, n)
                                 .times_monomial(CoeffPoly(BigInt(1)), n * (n - 1) / 2));
    }
    /* The sum starts at n = 1, so the empty partition is excluded; its n = 1
     * term still has a constant 1, which is why the comparison starts at
     * weight 1. */
    for (int w = 1; w <= max_weight; ++w) {
        std::int64_t count = 0;
        for_each_partition(w, [&](const Partition& p) {
            if (p.empty()) return;
            for (size_t i = 0; i + 1 < p.size(); ++i) {
                int gap = p[i] - p[i + 1];
                if (gap <= 0 || gap % 2 == 0) return;  // distinct parts, odd gaps
            }
            ++count;
        });
        ++report.cases_checked;
        if (series.coefficient(w, 0, 0) != count) {
            report.pass = false;
            std::ostringstream os;
            os << "weight " << w << ": series gives " << series.coefficient(w, 0, 0).str()
               << ", enumeration gives " << count;
            report.detail = os.str();
            break;
        }
    }
    return report;
}

}  // namespace qrr::partitions
