#pragma once

#include <cmath>
#include <stdexcept>

#include "cvarsens/normal.hpp"

namespace cvarsens {

enum class OptionKind { put, call };

struct D1D2 {
    double d1 = 0;
    double d2 = 0;
};

inline void bs_check_domain(double spot, double strike, double rate, double sigma, double ttm) {
    (void)rate;
    if (!(spot > 0.0)) throw std::domain_error("black-scholes: spot must be positive");
    if (!(strike > 0.0)) throw std::domain_error("black-scholes: strike must be positive");
    if (!(sigma > 0.0)) throw std::domain_error("black-scholes: volatility must be positive");
    if (!(ttm > 0.0)) throw std::domain_error("black-scholes: time to maturity must be positive");
}

inline D1D2 bs_d1d2(double spot, double strike, double rate, double sigma, double ttm) {
    bs_check_domain(spot, strike, rate, sigma, ttm);
    const double sig_sqrt_t = sigma * std::sqrt(ttm);
    const double d1 = (std::log(spot / strike) + (rate + 0.5 * sigma * sigma) * ttm) / sig_sqrt_t;
    return {d1, d1 - sig_sqrt_t};
}

inline double bs_value(double spot, double strike, double rate, double sigma, double ttm,
                       OptionKind kind) {
    const auto [d1, d2] = bs_d1d2(spot, strike, rate, sigma, ttm);
    const double disc_strike = strike * std::exp(-rate * ttm);
    if (kind == OptionKind::put) return disc_strike * normal_cdf(-d2) - spot * normal_cdf(-d1);
    return spot * normal_cdf(d1) - disc_strike * normal_cdf(d2);
}

// dV/dS at fixed (strike, rate, sigma, ttm).
inline double bs_delta(double spot, double strike, double rate, double sigma, double ttm,
                       OptionKind kind) {
    const auto [d1, d2] = bs_d1d2(spot, strike, rate, sigma, ttm);
    (void)d2;
    return kind == OptionKind::call ? normal_cdf(d1) : normal_cdf(d1) - 1.0;
}

// dV/dr at fixed spot.
inline double bs_rho(double spot, double strike, double rate, double sigma, double ttm,
                     OptionKind kind) {
    const auto [d1, d2] = bs_d1d2(spot, strike, rate, sigma, ttm);
    (void)d1;
    const double k = strike * ttm * std::exp(-rate * ttm);
    return kind == OptionKind::call ? k * normal_cdf(d2) : -k * normal_cdf(-d2);
}

// Spot at the risk horizon under real-world GBM, driven by a standard normal.
inline double gbm_price(double s0, double drift, double sigma, double horizon, double z) {
    if (!(s0 > 0.0)) throw std::domain_error("gbm_price: s0 must be positive");
    if (sigma < 0.0) throw std::domain_error("gbm_price: sigma must be nonnegative");
    if (horizon < 0.0) throw std::domain_error("gbm_price: horizon must be nonnegative");
    return s0 * std::exp((drift - 0.5 * sigma * sigma) * horizon + sigma * std::sqrt(horizon) * z);
}

}  // namespace cvarsens
