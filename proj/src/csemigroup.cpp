#include "umbral/csemigroup.hpp"

namespace umbral {

series to_series(const cfunction<n_plus>& f, flavor fl) {
    std::size_t bound = f.semigroup().bound;
    std::vector<rat> c(bound + 1);
    for (const auto& [e, v] : f.support())
        c[e] = v;
    return series(fl, std::move(c));
}

cfunction<n_plus> cfunction_from_series(const series& s) {
    cfunction<n_plus> f(n_plus{s.order()});
    for (std::size_t i = 0; i <= s.order(); ++i)
        if (!s.coeff(i).is_zero())
            f.set(i, s.coeff(i));
    return f;
}

cfunction<n_plus> cfunction_from_values(std::size_t bound, const std::vector<rat>& values) {
    if (values.size() > bound + 1)
        throw support_too_large("more values than the truncated carrier holds");
    cfunction<n_plus> f(n_plus{bound});
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero())
            f.set(i, values[i]);
    return f;
}

} // namespace umbral
