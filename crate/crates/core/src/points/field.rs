//! Finite fields `𝔽_{p^k} = 𝔽_p[x]/(m)` with elements packed as base-`p`
//! digit strings in a `u64` (digit `i` is the coefficient of `xⁱ`).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};

/// Fields up to this order get discrete log / Zech tables.
pub const TABLE_LIMIT: u64 = 1 << 22;

/// Sentinel log for the zero element.
pub const LOG_ZERO: u32 = u32::MAX;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Dense polynomial over 𝔽_p, lowest degree first, no trailing zeros.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Fp {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * inv_lead % p;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let k = top - dm + i;
                r[k] = (r[k] + p - c * mi % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and small: Fermat.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Monic polynomial of degree `k` whose lower coefficients are the base-`p`
/// digits of `code`.
fn monic_from_code(mut code: u64, k: usize, p: u64) -> Fp {
    let mut m = Vec::with_capacity(k + 1);
    for _ in 0..k {
        m.push(code % p);
        code /= p;
    }
    m.push(1);
    m
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    if k <= 1 {
        return true;
    }
    for d in 1..=k / 2 {
        for code in 0..p.pow(d as u32) {
            if fp_rem(m, &monic_from_code(code, d, p), p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `k`, comparing the
/// coefficient tuples from the top coefficient down.
pub fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    // Ordering codes by numeric value compares the high digits first.
    (0..p.pow(k as u32))
        .map(|code| monic_from_code(code, k, p))
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[derive(Debug)]
struct Tables {
    /// `exp[i] = gⁱ` for `i < Q−1`.
    exp: Vec<u32>,
    /// `log[x]`, `LOG_ZERO` at 0.
    log: Vec<u32>,
    /// `zech[i] = log(1 + gⁱ)`, `LOG_ZERO` when that sum vanishes.
    zech: Vec<u32>,
}

/// Immutable handle for `𝔽_{p^k}`. Cheap to share across threads.
#[derive(Debug)]
pub struct GaloisField {
    p: u64,
    degree: usize,
    order: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

impl GaloisField {
    pub fn new(p: u64, degree: usize) -> Result<Self> {
        if !is_prime(p) || degree == 0 {
            return Err(Error::InvalidField { p, r: degree as u32 });
        }
        let order = (p as u128).checked_pow(degree as u32).filter(|&q| q <= u64::MAX as u128 / p as u128);
        let Some(order) = order else {
            return Err(Error::InvalidField { p, r: degree as u32 });
        };
        let modulus = least_irreducible(p, degree);
        let mut f = GaloisField { p, degree, order: order as u64, modulus, tables: None };
        if f.order <= TABLE_LIMIT {
            f.tables = Some(f.build_tables());
        }
        Ok(f)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of the defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Image of an integer under ℤ → 𝔽_p ⊂ 𝔽_{p^k}.
    pub fn from_int(&self, c: i64) -> u64 {
        (c.rem_euclid(self.p as i64)) as u64
    }

    /// All elements, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order
    }

    fn digits(&self, mut a: u64) -> Fp {
        let mut out = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            out.push(a % self.p);
            a /= self.p;
        }
        trim(out)
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let d: Fp = self.digits(a).into_iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let prod = fp_mul(&self.digits(a), &self.digits(b), self.p);
        self.encode(&fp_rem(&prod, &self.modulus, self.p))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let s = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % (self.order - 1);
                t.exp[s as usize] as u64
            }
            None => self.mul_slow(a, b),
        }
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inverse(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.order - 2))
    }

    /// Discrete log to the table generator; `LOG_ZERO` for 0.
    pub fn log(&self, a: u64) -> Option<u32> {
        self.tables.as_ref().map(|t| t.log[a as usize])
    }

    /// Log-domain addition: `log(gᵘ + gʷ)` via the Zech table.
    #[inline]
    pub fn log_add(&self, u: u32, w: u32) -> u32 {
        let t = self.tables.as_ref().expect("log_add needs tables");
        if u == LOG_ZERO {
            return w;
        }
        if w == LOG_ZERO {
            return u;
        }
        let n = (self.order - 1) as u32;
        let d = if w >= u { w - u } else { w + n - u };
        let z = t.zech[d as usize];
        if z == LOG_ZERO {
            return LOG_ZERO;
        }
        let s = u as u64 + z as u64;
        (if s >= n as u64 { s - n as u64 } else { s }) as u32
    }

    fn build_tables(&self) -> Tables {
        let n = self.order - 1;
        let primes = prime_factors(n);
        let g = (2..self.order.max(3))
            .chain(std::iter::once(1))
            .find(|&g| g < self.order && primes.iter().all(|&l| self.pow_slow(g, n / l) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![LOG_ZERO; self.order as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, g);
        }
        let zech = exp
            .iter()
            .map(|&e| log[self.add(e as u64, 1) as usize])
            .collect();
        Tables { exp, log, zech }
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The tower `𝔽_q ⊂ 𝔽_{q²} ⊂ …` with `q = pʳ`. Each level is built directly
/// over 𝔽_p and cached.
#[derive(Debug)]
pub struct FieldTower {
    p: u64,
    r: u32,
    cache: Mutex<HashMap<u32, Arc<GaloisField>>>,
}

impl FieldTower {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) || r == 0 || (p as u128).checked_pow(r).is_none_or(|q| q > u64::MAX as u128) {
            return Err(Error::InvalidField { p, r });
        }
        Ok(FieldTower { p, r, cache: Mutex::new(HashMap::new()) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// `𝔽_{qⁿ}` for `n ≥ 1`.
    pub fn build_extension(&self, n: u32) -> Result<Arc<GaloisField>> {
        if n == 0 {
            return Err(Error::InvalidField { p: self.p, r: 0 });
        }
        let mut cache = self.cache.lock().expect("field cache poisoned");
        if let Some(f) = cache.get(&n) {
            return Ok(Arc::clone(f));
        }
        let f = Arc::new(GaloisField::new(self.p, (self.r * n) as usize)?);
        cache.insert(n, Arc::clone(&f));
        Ok(f)
    }

    /// Defining polynomials built so far, keyed by `n`.
    pub fn cached_moduli(&self) -> Vec<(u32, Vec<u64>)> {
        let cache = self.cache.lock().expect("field cache poisoned");
        let mut out: Vec<_> = cache.iter().map(|(&n, f)| (n, f.modulus.clone())).collect();
        out.sort();
        out
    }
}
