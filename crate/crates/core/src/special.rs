//! Bessel functions evaluated in-repo: J_m for integer m >= 0, Y_0 and Y_1,
//! and the order-zero Hankel function of the first kind.
//!
//! Evaluation strategy:
//! * ascending power series below `SERIES_CUTOFF`, where the largest term
//!   stays small enough that cancellation costs at most ~5 digits;
//! * Hankel's large-argument expansion for orders 0 and 1 above the cutoff;
//! * Miller's downward recurrence (normalized with J_0 + 2 J_2 + 2 J_4 + ... = 1)
//!   for higher orders above the cutoff.
//!
//! Accuracy is ~1e-11 absolute on x in [0, 50], which the unit tests pin down
//! through the Wronskian identity and series/asymptotic cross-checks.

use num_complex::Complex64;

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Switch point between the power series and the asymptotic expansion.
const SERIES_CUTOFF: f64 = 16.0;

/// J_m(x) for integer order m >= 0 and x >= 0.
pub(crate) fn bessel_jn(order: u32, x: f64) -> f64 {
    assert!(x >= 0.0, "bessel_jn requires x >= 0");
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_CUTOFF {
        return jn_series(order, x);
    }
    match order {
        0 | 1 => jn_asymptotic(order, x),
        _ => jn_miller(order, x),
    }
}

/// J_0(x) for x >= 0.
pub(crate) fn bessel_j0(x: f64) -> f64 {
    bessel_jn(0, x)
}

/// J_1(x) for x >= 0.
pub(crate) fn bessel_j1(x: f64) -> f64 {
    bessel_jn(1, x)
}

/// Y_0(x) for x > 0.
pub(crate) fn bessel_y0(x: f64) -> f64 {
    assert!(x > 0.0, "bessel_y0 requires x > 0");
    if x < SERIES_CUTOFF {
        y0_series(x)
    } else {
        yn_asymptotic(0, x)
    }
}

/// Y_1(x) for x > 0.
pub(crate) fn bessel_y1(x: f64) -> f64 {
    assert!(x > 0.0, "bessel_y1 requires x > 0");
    if x < SERIES_CUTOFF {
        y1_series(x)
    } else {
        yn_asymptotic(1, x)
    }
}

/// H_0^(1)(x) = J_0(x) + i Y_0(x), the outgoing Hankel function of order zero.
pub(crate) fn hankel1_0(x: f64) -> Complex64 {
    Complex64::new(bessel_j0(x), bessel_y0(x))
}

/// Ascending series J_m(x) = sum_j (-1)^j (x/2)^{m+2j} / (j! (m+j)!).
fn jn_series(order: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let quarter_sq = half * half;
    // term_0 = (x/2)^m / m!
    let mut term = 1.0;
    for i in 1..=order {
        term *= half / i as f64;
    }
    let mut sum = term;
    let mut peak = sum.abs();
    for j in 1..400u32 {
        term *= -quarter_sq / (j as f64 * (j + order) as f64);
        sum += term;
        peak = peak.max(term.abs());
        if term.abs() < 1e-18 * peak.max(1e-300) {
            break;
        }
    }
    sum
}

/// P and Q sums of the Hankel large-argument expansion at integer order,
/// with terms generated on the fly and truncated at the smallest one.
fn hankel_pq(order: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (order as f64) * (order as f64);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..40u32 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= prev {
            break; // divergent tail of the asymptotic series
        }
        prev = term.abs();
        // sign pattern +, +, -, -, repeating over k mod 4
        let signed = if k % 4 == 1 || k % 4 == 2 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    (p, q)
}

fn jn_asymptotic(order: u32, x: f64) -> f64 {
    let (p, q) = hankel_pq(order, x);
    let chi = x - (order as f64) * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

fn yn_asymptotic(order: u32, x: f64) -> f64 {
    let (p, q) = hankel_pq(order, x);
    let chi = x - (order as f64) * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.sin() + q * chi.cos())
}

/// Miller's downward recurrence for J_m(x) at large x, normalized through
/// J_0 + 2 sum_k J_{2k} = 1. Start order is far enough above max(m, x) that
/// the seeded tail has decayed below machine precision.
fn jn_miller(order: u32, x: f64) -> f64 {
    let start = {
        let base = (x.ceil() as u32).max(order) + 40 + (x as u32) / 4;
        base + (base & 1) // make it even
    };
    let mut jp = 0.0f64; // J~_{n+1}
    let mut jc = 1e-30f64; // J~_n
    let mut norm = 0.0f64;
    let mut result = if order == start { jc } else { 0.0 };
    let mut n = start;
    while n > 0 {
        let jm = (2.0 * n as f64 / x) * jc - jp;
        jp = jc;
        jc = jm;
        n -= 1;
        if n == order {
            result = jc;
        }
        if n % 2 == 0 && n > 0 {
            norm += 2.0 * jc;
        }
        if jc.abs() > 1e250 {
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    norm += jc; // adds J~_0
    result / norm
}

/// Series for Y_0 with the logarithmic term split off:
/// Y_0 = (2/pi)(ln(x/2) + gamma) J_0 + (2/pi) sum_{k>=1} (-1)^{k+1} H_k t^k/(k!)^2,
/// t = x^2/4, H_k the k-th harmonic number.
fn y0_series(x: f64) -> f64 {
    let t = 0.25 * x * x;
    let mut term = 1.0; // t^k / (k!)^2 at k = 0
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 1..400u32 {
        term *= t / ((k * k) as f64);
        harmonic += 1.0 / k as f64;
        let contrib = if k % 2 == 1 { term * harmonic } else { -term * harmonic };
        sum += contrib;
        if term * harmonic < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    let log_part = ((0.5 * x).ln() + EULER_GAMMA) * bessel_j0(x);
    std::f64::consts::FRAC_2_PI * (log_part + sum)
}

/// Series companion for Y_1:
/// Y_1 = (2/pi)(ln(x/2) + gamma) J_1 - 2/(pi x)
///       - (x/(2 pi)) sum_{k>=0} (-1)^k (H_k + H_{k+1}) t^k / (k! (k+1)!).
fn y1_series(x: f64) -> f64 {
    let t = 0.25 * x * x;
    let mut term = 1.0; // t^k / (k! (k+1)!) at k = 0
    let mut hk = 0.0;
    let mut hk1 = 1.0;
    let mut sum = term * (hk + hk1);
    for k in 1..400u32 {
        term *= t / ((k * (k + 1)) as f64);
        hk += 1.0 / k as f64;
        hk1 += 1.0 / (k + 1) as f64;
        let contrib = if k % 2 == 0 { term * (hk + hk1) } else { -term * (hk + hk1) };
        sum += contrib;
        if term * (hk + hk1) < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    let log_part = ((0.5 * x).ln() + EULER_GAMMA) * bessel_j1(x);
    std::f64::consts::FRAC_2_PI * log_part - std::f64::consts::FRAC_2_PI / x
        - x / (2.0 * std::f64::consts::PI) * sum
}
