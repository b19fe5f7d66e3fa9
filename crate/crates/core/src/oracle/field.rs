//! Small finite fields GF(p^e), elements encoded as base-p digit vectors
//! packed into `u32` (coefficient of `x^i` is digit `i`).

#[derive(Debug, Clone)]
pub struct FiniteField {
    pub p: u32,
    pub e: u32,
    pub order: u32,
    /// monic irreducible modulus, coefficients low to high (length e+1)
    modulus: Vec<u32>,
}

pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut n, mut e) = (q, 0);
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    (n == 1).then_some((p, e))
}

impl FiniteField {
    pub fn new(q: u32) -> Option<Self> {
        let (p, e) = prime_power(q)?;
        let modulus = (0..q)
            .map(|low| {
                let mut c = digits(low, p, e as usize);
                c.push(1);
                c
            })
            .find(|f| is_irreducible(f, p))?;
        Some(FiniteField { p, e, order: q, modulus })
    }

    fn to_poly(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.e as usize)
    }

    fn encode(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.to_poly(a), self.to_poly(b));
        let c: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + self.p - v) % self.p).collect();
        self.encode(&c)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.to_poly(a), &self.to_poly(b), self.p);
        let r = poly_rem(&prod, &self.modulus, self.p);
        let mut r = r;
        r.resize(self.e as usize, 0);
        self.encode(&r)
    }

    pub fn nonzero_squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.order as usize];
        for x in 1..self.order {
            sq[self.mul(x, x) as usize] = true;
        }
        sq
    }
}

fn digits(mut a: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(a % p);
        a /= p;
    }
    out
}

fn trim(mut c: Vec<u32>) -> Vec<u32> {
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|x| (a * x) % p == 1).expect("p prime")
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let lead_inv = inv_mod(*m.last().unwrap(), p);
    while r.len() >= m.len() && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - m.len();
        let f = (r.last().unwrap() * lead_inv) % p;
        for (i, c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - f * c % p) % p;
        }
        r = trim(r);
        if r.len() < m.len() {
            break;
        }
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [5, 9, 13, 25, 27, 49, 81] {
            let f = FiniteField::new(q).unwrap();
            // every nonzero element has an inverse
            for a in 1..q {
                assert!((1..q).any(|b| f.mul(a, b) == 1), "q={q} a={a}");
            }
            // exactly (q-1)/2 nonzero squares for odd q
            let sq = f.nonzero_squares().iter().filter(|&&b| b).count() as u32;
            assert_eq!(sq, (q - 1) / 2);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(12).is_none());
        assert!(FiniteField::new(1).is_none());
        assert_eq!(prime_power(81), Some((3, 4)));
    }
}
