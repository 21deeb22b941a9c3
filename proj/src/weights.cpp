#include "qlab/weights.hpp"

#include <stdexcept>
#include <string>

namespace qlab {

bool valid_step(int a, int b, int p_prime)
{
    if (a < 1 || b < 1 || a > p_prime - 1 || b > p_prime - 1) {
        return false;
    }
    const int d = b - a;
    if (d != 0 && d != 2 && d != -2) {
        return false;
    }
    return !(d == 0 && (a == 1 || a == p_prime - 1));
}

namespace {

// {(s+1)/t} = {p(s+1)/p'}
QExp frac_site(int s, const ModelParams& m) { return QExp(static_cast<std::int64_t>(s + 1) * m.p(), m.p_prime()).frac(); }

int x_of(TauLabel l) { return l == TauLabel::one_b ? 3 : 2; }
int y_of(TauLabel l)
{
    switch (l) {
    case TauLabel::one_a: return 3;
    case TauLabel::one_b: return 2;
    default: return 4;
    }
}

} // namespace

QExp weight(int a, int b, int c, const TauTable& tau)
{
    const int pp = tau.p_prime();
    if (!valid_step(a, b, pp) || !valid_step(b, c, pp)) {
        throw std::invalid_argument("weight: invalid triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
    }
    const ModelParams& m = tau.params();
    const QExp inv_t(m.p(), m.p_prime());
    const int in = b - a;
    const int out = c - b;
    if (in == out && in != 0) {
        return inv_t * QExp(2);
    }
    if (in == 2 && out == 0) {
        return QExp(2) - frac_site(a, m);
    }
    if (in == 0 && out == -2) {
        return QExp(2) - frac_site(c, m);
    }
    if (in == 0 && out == 2) {
        return QExp(1) + frac_site(b, m);
    }
    if (in == -2 && out == 0) {
        return QExp(1) + frac_site(b, m);
    }
    if (in == 2 && out == -2) {
        return QExp(x_of(tau.label(a))) - frac_site(a, m) * QExp(2);
    }
    if (in == 0 && out == 0) {
        return QExp(3 - tau.tau(b));
    }
    // in == -2, out == 2: the valley (a, a-2, a)
    return frac_site(a, m) * QExp(2) - inv_t * QExp(4) + QExp(y_of(tau.label(a)));
}

} // namespace qlab
