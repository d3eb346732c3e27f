//! Real-root isolation with exact Sturm sequences.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{frac, int, rational_from_f64, Rational, Scalar};

type Q = Polynomial<Rational>;

/// Bracket width at which refinement stops.
pub const ROOT_WIDTH: f64 = 1e-14;

/// A simple real root known to lie in `[lower, upper]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub lower: Rational,
    pub upper: Rational,
}

impl RealRoot {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Exact rational copy of the coefficients (floats are converted exactly).
pub fn rationalize<S: Scalar>(p: &Polynomial<S>) -> Q {
    p.to_rational()
}

/// `p / gcd(p, p')`.
pub fn squarefree_part(p: &Q) -> Q {
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        p.clone()
    } else {
        p.exact_div(&g)
    }
}

/// `p, p', -rem(p, p'), ...` with every term scaled to a unit leading
/// coefficient (positive factors leave the sign pattern intact).
pub fn sturm_sequence(p: &Q) -> Vec<Q> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d.normalized());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).normalized());
    }
    seq
}

pub fn sign_variations(seq: &[Q], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots in `(a, b]`; `a` must not be a root.
pub fn count_distinct_roots(p: &Q, a: &Rational, b: &Rational) -> usize {
    let seq = sturm_sequence(p);
    sign_variations(&seq, a) - sign_variations(&seq, b)
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn strip_root(mut s: Q, at: i64) -> Q {
    let factor = Q::from_i64(&[-at, 1]);
    while s.eval(&int(at)).is_zero() && s.degree().unwrap_or(0) > 0 {
        s = s.exact_div(&factor);
    }
    s
}

/// Roots of the squarefree `s` in `(lo, hi)`; neither endpoint may be a root.
fn isolate(s: &Q, lo: Rational, hi: Rational) -> Vec<(Rational, Rational)> {
    let seq = sturm_sequence(s);
    let deg = s.degree().unwrap_or(0);
    let mut out = Vec::new();
    let mut stack = vec![(
        lo.clone(),
        hi.clone(),
        sign_variations(&seq, &lo),
        sign_variations(&seq, &hi),
    )];
    while let Some((a, b, va, vb)) = stack.pop() {
        match va - vb {
            0 => {}
            1 => out.push(refine(s, a, b)),
            _ => {
                // a split point that is not itself a root
                let mid = (0..=deg as i64 + 1)
                    .map(|j| &a + (&b - &a) * frac(j + 1, j + 2))
                    .find(|m| !s.eval(m).is_zero())
                    .expect("some candidate avoids the finitely many roots");
                let vm = sign_variations(&seq, &mid);
                stack.push((mid.clone(), b, vm, vb));
                stack.push((a, mid, va, vm));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Bisection on a bracket holding exactly one simple root.
fn refine(s: &Q, mut a: Rational, mut b: Rational) -> (Rational, Rational) {
    let width = rational_from_f64(ROOT_WIDTH).unwrap();
    let mut sa = sign(&s.eval(&a));
    let two = int(2);
    while &b - &a > width {
        let m = (&a + &b) / &two;
        let sm = sign(&s.eval(&m));
        if sm == 0 {
            return (m.clone(), m);
        }
        if sm == sa {
            a = m;
            sa = sm;
        } else {
            b = m;
        }
    }
    (a, b)
}

fn polish(p: &Q, lower: &Rational, upper: &Rational) -> f64 {
    let (lo, hi) = (lower.to_f64(), upper.to_f64());
    let mut x = ((lower + upper) / int(2)).to_f64();
    if lower == upper {
        return x;
    }
    let pf = p.to_f64();
    let df = pf.derivative();
    for _ in 0..3 {
        let d = df.eval(&x);
        if d == 0.0 {
            break;
        }
        let next = x - pf.eval(&x) / d;
        if !(lo..=hi).contains(&next) || pf.eval(&next).abs() >= pf.eval(&x).abs() {
            break;
        }
        x = next;
    }
    x
}

fn roots_in_open(p: &Q, lo: i64, hi: i64) -> Vec<RealRoot> {
    let mut s = squarefree_part(p);
    s = strip_root(strip_root(s, lo), hi);
    if s.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    isolate(&s, int(lo), int(hi))
        .into_iter()
        .map(|(lower, upper)| RealRoot {
            value: polish(&s, &lower, &upper),
            lower,
            upper,
        })
        .collect()
}

/// All real roots in the open interval `(-1, 1)`, ascending.
///
/// Fails on the zero polynomial and when a root inside the interval is
/// repeated.
pub fn real_roots_unit_interval<S: Scalar>(p: &Polynomial<S>) -> Result<Vec<RealRoot>> {
    let q = rationalize(p);
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = q.gcd(&q.derivative());
    if g.degree().unwrap_or(0) > 0 {
        if let Some(r) = roots_in_open(&g, -1, 1).first() {
            return Err(Error::NonSimpleRoot { approx: r.value });
        }
    }
    Ok(roots_in_open(&q, -1, 1))
}

/// Number of sign changes in the coefficient sequence.
pub fn descartes_bound<S: Scalar>(p: &Polynomial<S>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let signs: Vec<bool> = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Positive real roots counted with multiplicity.
pub fn positive_root_count<S: Scalar>(p: &Polynomial<S>) -> Result<usize> {
    let q = rationalize(p);
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let first = q.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let mut q = Q::new(q.coeffs()[first..].to_vec());
    let lead = q.leading().unwrap().abs();
    let bound = Rational::one()
        + q.coeffs()
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |m, c| if c > m { c } else { m });
    let mut total = 0;
    while q.degree().unwrap_or(0) > 0 {
        total += count_distinct_roots(&q, &Rational::zero(), &bound);
        q = q.gcd(&q.derivative());
    }
    Ok(total)
}

/// `z + 1/z`.
pub fn zhukovsky(z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::InvalidParameter("Zhukovsky map is undefined at 0".into()));
    }
    Ok(z + 1.0 / z)
}
