//! Towers of real quadratic extensions of the rationals.
//!
//! A tower `Q = K0 ⊂ K1 ⊂ … ⊂ Kn` is described by radicals `t_i = √r_i`
//! with `r_i ∈ K_i` positive and not a square in `K_i`. Each `K_{i+1}` is
//! therefore a genuine field of degree two over `K_i`, and every element has
//! a unique representation `a + b·t_i` with `a, b ∈ K_i`. Zero testing is
//! structural; signs are decided by recursion on the tower.
//!
//! Values built in different towers are brought together by [`merge`], which
//! re-adjoins the radicals of one tower to the other, reusing any root that
//! already lies in the target field.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use dashu_int::ops::SquareRoot;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use super::interval::Interval;

static NEXT_TOWER_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) struct Radical {
    pub radicand: Elem,
    pub iv: Interval,
    pub depth: u32,
    /// Norm of the radicand down to the rationals, from its own height.
    norm: OnceLock<RBig>,
}

pub(crate) struct Tower {
    pub id: u64,
    pub rads: Vec<Arc<Radical>>,
}

impl Tower {
    pub fn empty() -> Arc<Tower> {
        static EMPTY: OnceLock<Arc<Tower>> = OnceLock::new();
        EMPTY
            .get_or_init(|| Arc::new(Tower { id: 0, rads: Vec::new() }))
            .clone()
    }

    pub fn len(&self) -> usize {
        self.rads.len()
    }

    fn is_prefix_of(&self, other: &Tower) -> bool {
        self.len() <= other.len()
            && self
                .rads
                .iter()
                .zip(other.rads.iter())
                .all(|(a, b)| Arc::ptr_eq(a, b))
    }

    fn common_prefix(&self, other: &Tower) -> usize {
        self.rads
            .iter()
            .zip(other.rads.iter())
            .take_while(|(a, b)| Arc::ptr_eq(a, b))
            .count()
    }

    /// Extends the tower by `√radicand`. The caller guarantees the radicand
    /// is positive and not a square in this tower.
    /// Adjoining the same radicand to the same tower twice gives the same
    /// tower, so values computed separately stay comparable without a merge.
    pub fn adjoin(self: &Arc<Tower>, radicand: Elem) -> Arc<Tower> {
        let key = (self.id, Key(radicand.clone()));
        if let Some(t) = adjoin_cache().lock().unwrap().get(&key) {
            return t.clone();
        }
        let t = self.adjoin_fresh(radicand);
        let mut cache = adjoin_cache().lock().unwrap();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.entry(key).or_insert(t).clone()
    }

    fn adjoin_fresh(self: &Arc<Tower>, radicand: Elem) -> Arc<Tower> {
        let iv = interval(&radicand, &self.rads).sqrt();
        let depth = 1 + elem_depth(&radicand, &self.rads);
        let mut rads = self.rads.clone();
        rads.push(Arc::new(Radical {
            radicand,
            iv,
            depth,
            norm: OnceLock::new(),
        }));
        Arc::new(Tower {
            id: NEXT_TOWER_ID.fetch_add(1, Ordering::Relaxed),
            rads,
        })
    }
}

#[derive(Clone)]
pub(crate) enum Elem {
    Rat(RBig),
    Ext(Arc<ExtNode>),
}

pub(crate) struct ExtNode {
    pub level: usize,
    pub a: Elem,
    pub b: Elem,
    iv: OnceLock<Interval>,
}

impl Elem {
    pub fn rat(q: RBig) -> Elem {
        Elem::Rat(q)
    }

    pub fn zero() -> Elem {
        Elem::rat(RBig::ZERO)
    }

    pub fn one() -> Elem {
        Elem::rat(RBig::ONE)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Elem::Rat(q) if q.is_zero())
    }

    pub fn as_rational(&self) -> Option<&RBig> {
        match self {
            Elem::Rat(q) => Some(q),
            Elem::Ext(_) => None,
        }
    }

    /// Index of the highest radical this element uses.
    pub fn top(&self) -> Option<usize> {
        match self {
            Elem::Rat(_) => None,
            Elem::Ext(n) => Some(n.level),
        }
    }

    /// Number of radicals the element can reference (`top + 1`).
    fn height(&self) -> usize {
        self.top().map_or(0, |l| l + 1)
    }

    /// The radical `t_level` itself.
    pub fn radical(level: usize) -> Elem {
        mk(level, Elem::zero(), Elem::one())
    }
}

pub(crate) fn mk(level: usize, a: Elem, b: Elem) -> Elem {
    if b.is_zero() {
        a
    } else {
        Elem::Ext(Arc::new(ExtNode {
            level,
            a,
            b,
            iv: OnceLock::new(),
        }))
    }
}

/// Splits `x` as `a + b·t_level`.
fn split(x: &Elem, level: usize) -> (Elem, Elem) {
    match x {
        Elem::Ext(n) if n.level == level => (n.a.clone(), n.b.clone()),
        _ => (x.clone(), Elem::zero()),
    }
}

pub(crate) fn add(x: &Elem, y: &Elem) -> Elem {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => Elem::rat(p + q),
        _ if x.is_zero() => y.clone(),
        _ if y.is_zero() => x.clone(),
        _ => {
            let l = x.height().max(y.height()) - 1;
            let (xa, xb) = split(x, l);
            let (ya, yb) = split(y, l);
            mk(l, add(&xa, &ya), add(&xb, &yb))
        }
    }
}

pub(crate) fn neg(x: &Elem) -> Elem {
    match x {
        Elem::Rat(q) => Elem::rat(-q),
        Elem::Ext(n) => mk(n.level, neg(&n.a), neg(&n.b)),
    }
}

pub(crate) fn sub(x: &Elem, y: &Elem) -> Elem {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => Elem::rat(p - q),
        _ if y.is_zero() => x.clone(),
        _ if x.is_zero() => neg(y),
        _ => {
            let l = x.height().max(y.height()) - 1;
            let (xa, xb) = split(x, l);
            let (ya, yb) = split(y, l);
            mk(l, sub(&xa, &ya), sub(&xb, &yb))
        }
    }
}

pub(crate) fn scale(x: &Elem, q: &RBig) -> Elem {
    if q.is_zero() {
        return Elem::zero();
    }
    if q.is_one() {
        return x.clone();
    }
    match x {
        Elem::Rat(p) => Elem::rat(p * q),
        Elem::Ext(n) => mk(n.level, scale(&n.a, q), scale(&n.b, q)),
    }
}

pub(crate) fn mul(x: &Elem, y: &Elem, rads: &[Arc<Radical>]) -> Elem {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => Elem::rat(p * q),
        (Elem::Rat(p), _) => scale(y, p),
        (_, Elem::Rat(q)) => scale(x, q),
        (Elem::Ext(m), Elem::Ext(n)) if Arc::ptr_eq(m, n) => sqr(x, rads),
        _ => {
            let l = x.height().max(y.height()) - 1;
            let (xa, xb) = split(x, l);
            let (ya, yb) = split(y, l);
            if xb.is_zero() {
                return mk(l, mul(&xa, &ya, rads), mul(&xa, &yb, rads));
            }
            if yb.is_zero() {
                return mk(l, mul(&xa, &ya, rads), mul(&xb, &ya, rads));
            }
            let r = &rads[l].radicand;
            let p = mul(&xa, &ya, rads);
            let q = mul(&xb, &yb, rads);
            let b = if l == 0 {
                add(&mul(&xa, &yb, rads), &mul(&xb, &ya, rads))
            } else {
                // three products instead of four once the parts are themselves
                // extensions
                let s = mul(&add(&xa, &xb), &add(&ya, &yb), rads);
                sub(&sub(&s, &p), &q)
            };
            mk(l, add(&p, &mul(&q, r, rads)), b)
        }
    }
}

/// `x²`, which needs three half-size products where a general product
/// needs four.
pub(crate) fn sqr(x: &Elem, rads: &[Arc<Radical>]) -> Elem {
    match x {
        Elem::Rat(q) => Elem::rat(q * q),
        Elem::Ext(n) => {
            let r = &rads[n.level].radicand;
            let a2 = sqr(&n.a, rads);
            let b2 = sqr(&n.b, rads);
            let ab = mul(&n.a, &n.b, rads);
            mk(
                n.level,
                add(&a2, &mul(&b2, r, rads)),
                scale(&ab, &RBig::from(2u8)),
            )
        }
    }
}

/// Multiplicative inverse. `x` must be nonzero.
pub(crate) fn inv(x: &Elem, rads: &[Arc<Radical>]) -> Elem {
    match x {
        Elem::Rat(q) => Elem::rat(RBig::ONE / q),
        Elem::Ext(n) => {
            let r = &rads[n.level].radicand;
            let norm = sub(&sqr(&n.a, rads), &mul(&sqr(&n.b, rads), r, rads));
            let ni = inv(&norm, rads);
            mk(n.level, mul(&n.a, &ni, rads), neg(&mul(&n.b, &ni, rads)))
        }
    }
}

pub(crate) fn interval(x: &Elem, rads: &[Arc<Radical>]) -> Interval {
    match x {
        Elem::Rat(q) => Interval::from_rational(q),
        Elem::Ext(n) => *n.iv.get_or_init(|| {
            interval(&n.a, rads).add(interval(&n.b, rads).mul(rads[n.level].iv))
        }),
    }
}

/// Exact sign in `{-1, 0, 1}`.
pub(crate) fn sign(x: &Elem, rads: &[Arc<Radical>]) -> i8 {
    match x {
        Elem::Rat(q) => rat_sign(q),
        Elem::Ext(n) => {
            if let Some(s) = interval(x, rads).sign() {
                return s;
            }
            // a + b·√r with b ≠ 0
            let sa = sign(&n.a, rads);
            let sb = sign(&n.b, rads);
            if sa == 0 || sa == sb {
                return if sa == 0 { sb } else { sa };
            }
            let r = &rads[n.level].radicand;
            let d = sub(&sqr(&n.a, rads), &mul(&sqr(&n.b, rads), r, rads));
            sa * sign(&d, rads)
        }
    }
}

pub(crate) fn elem_eq(x: &Elem, y: &Elem) -> bool {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => p == q,
        (Elem::Ext(m), Elem::Ext(n)) => {
            Arc::ptr_eq(m, n)
                || (m.level == n.level && elem_eq(&m.a, &n.a) && elem_eq(&m.b, &n.b))
        }
        _ => false,
    }
}

pub(crate) fn elem_depth(x: &Elem, rads: &[Arc<Radical>]) -> u32 {
    match x {
        Elem::Rat(_) => 0,
        Elem::Ext(n) => rads[n.level]
            .depth
            .max(elem_depth(&n.a, rads))
            .max(elem_depth(&n.b, rads)),
    }
}

pub(crate) fn rat_sign(q: &RBig) -> i8 {
    if q.is_zero() {
        0
    } else if q.numerator() < &IBig::ZERO {
        -1
    } else {
        1
    }
}

fn rational_sqrt(q: &RBig) -> Option<RBig> {
    if rat_sign(q) < 0 {
        return None;
    }
    let n = int_sqrt(&UBig::try_from(q.numerator().clone()).ok()?)?;
    let d = int_sqrt(q.denominator())?;
    Some(RBig::from_parts(n.into(), d))
}

fn int_sqrt(n: &UBig) -> Option<UBig> {
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Writes a positive rational as `k²·m` with `m` a positive integer free of
/// small square factors. Returns `(k, m)`.
pub(crate) fn square_split(q: &RBig) -> (RBig, UBig) {
    // √(n/d) = √(n·d) / d
    let nd = UBig::try_from(q.numerator().clone()).expect("positive") * q.denominator();
    let (k, m) = match u64::try_from(&nd) {
        Ok(small) => {
            let (k, m) = square_split_u64(small);
            (UBig::from(k), UBig::from(m))
        }
        Err(_) => square_split_big(nd),
    };
    (RBig::from_parts(k.into(), q.denominator().clone()), m)
}

/// Trial division by the primes below 2000.
fn square_split_u64(mut m: u64) -> (u64, u64) {
    let mut k = 1;
    let mut p: u64 = 2;
    while p < 2000 && p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            k *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let s = m.isqrt();
    if s * s == m {
        (k * s, 1)
    } else {
        (k, m)
    }
}

fn square_split_big(mut m: UBig) -> (UBig, UBig) {
    let mut k = UBig::ONE;
    let mut p: u32 = 2;
    while p < 2000 {
        let pp = UBig::from(p * p);
        if pp > m {
            break;
        }
        while (&m % &pp).is_zero() {
            m /= &pp;
            k *= UBig::from(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(s) = int_sqrt(&m) {
        k *= s;
        m = UBig::ONE;
    }
    (k, m)
}

/// An element compared by structure, for memo tables.
struct Key(Elem);

impl Hash for Key {
    fn hash<H: Hasher>(&self, h: &mut H) {
        fn go<H: Hasher>(x: &Elem, h: &mut H) {
            match x {
                Elem::Rat(q) => q.hash(h),
                Elem::Ext(n) => {
                    n.level.hash(h);
                    go(&n.a, h);
                    go(&n.b, h);
                }
            }
        }
        go(&self.0, h)
    }
}

impl PartialEq for Key {
    fn eq(&self, other: &Key) -> bool {
        elem_eq(&self.0, &other.0)
    }
}

impl Eq for Key {}

type SqrtMemo = HashMap<(Key, usize), Option<Elem>>;

/// A square root of `x` inside `K_n` (the field of the first `n` radicals),
/// if one exists. The sign of the returned root is unspecified.
pub(crate) fn sqrt_within(x: &Elem, rads: &[Arc<Radical>], n: usize) -> Option<Elem> {
    let mut memo = SqrtMemo::new();
    sqrt_in(x, rads, n, &mut memo)
}

/// Norm of `x ∈ K_h` down to the rationals.
fn rational_norm(x: &Elem, rads: &[Arc<Radical>], h: usize) -> RBig {
    let mut y = x.clone();
    for l in (0..h).rev() {
        let (a, b) = split(&y, l);
        y = if b.is_zero() {
            sqr(&a, rads)
        } else {
            sub(&sqr(&a, rads), &mul(&sqr(&b, rads), &rads[l].radicand, rads))
        };
    }
    y.as_rational().expect("norm is rational").clone()
}

/// Rules out a root of `x ∈ K_h` in `K_n` when every radicand above `h`
/// already lies in `K_h`. Then `K_n` is multiquadratic over `K_h`, and `x`
/// has a root there only if `x` times some product of those radicands is a
/// square in `K_h`. Norms to the rationals turn that into finitely many
/// rational square tests; radicands below height `h` have square norms and
/// drop out.
fn kummer_excludes(x: &Elem, rads: &[Arc<Radical>], n: usize) -> bool {
    let h = x.height();
    if h >= n || rads[h..n].iter().any(|r| r.radicand.height() > h) {
        return false;
    }
    let gens: Vec<&RBig> = rads[h..n]
        .iter()
        .filter(|r| r.radicand.height() == h)
        .map(|r| r.norm.get_or_init(|| rational_norm(&r.radicand, rads, h)))
        .collect();
    if gens.len() > 10 {
        return false;
    }
    let nx = rational_norm(x, rads, h);
    !(0..1u32 << gens.len()).any(|mask| {
        let m = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(nx.clone(), |acc, (_, g)| acc * *g);
        rational_sqrt(&m).is_some()
    })
}

fn sqrt_in(x: &Elem, rads: &[Arc<Radical>], n: usize, memo: &mut SqrtMemo) -> Option<Elem> {
    if x.is_zero() {
        return Some(Elem::zero());
    }
    if n == 0 {
        return rational_sqrt(x.as_rational().expect("element above tower height"))
            .map(Elem::rat);
    }
    if interval(x, rads).sign() == Some(-1) {
        return None;
    }
    // K_n is real, so a square there and its conjugate over K_{n-1} are
    // both non-negative
    if let Elem::Ext(node) = x {
        if node.level == n - 1 {
            let conj = interval(&node.a, rads).sub(interval(&node.b, rads).mul(rads[n - 1].iv));
            if conj.sign() == Some(-1) {
                return None;
            }
        }
    }
    let key = (Key(x.clone()), n);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    if kummer_excludes(x, rads, n) {
        memo.insert(key, None);
        return None;
    }

    let l = n - 1;
    let (a, b) = split(x, l);
    let r = rads[l].radicand.clone();
    let found = if b.is_zero() {
        sqrt_in(&a, rads, l, memo).or_else(|| {
            // √a = √(a·r) / √r
            let s = sqrt_in(&mul(&a, &r, rads), rads, l, memo)?;
            Some(mk(l, Elem::zero(), mul(&s, &inv(&r, rads), rads)))
        })
    } else {
        let norm = sub(&sqr(&a, rads), &mul(&sqr(&b, rads), &r, rads));
        sqrt_in(&norm, rads, l, memo).and_then(|m| {
            let half = RBig::from_parts(IBig::ONE, UBig::from(2u8));
            [add(&a, &m), sub(&a, &m)].iter().find_map(|c| {
                let cand = scale(c, &half);
                if cand.is_zero() {
                    return None;
                }
                let p = sqrt_in(&cand, rads, l, memo)?;
                let q = mul(&b, &inv(&scale(&p, &RBig::from(2u8)), rads), rads);
                Some(mk(l, p, q))
            })
        })
    };
    memo.insert(key, found.clone());
    found
}

/// Two towers combined, with the images of the second tower's radicals.
pub(crate) struct Merged {
    pub tower: Arc<Tower>,
    /// Length of the prefix shared with the second tower.
    shared: usize,
    images: Vec<Elem>,
}

impl Merged {
    /// Re-expresses an element of the second tower inside the merged tower.
    pub fn embed(&self, x: &Elem) -> Elem {
        match x {
            Elem::Ext(n) if n.level >= self.shared => {
                let a = self.embed(&n.a);
                let b = self.embed(&n.b);
                add(
                    &a,
                    &mul(&b, &self.images[n.level - self.shared], &self.tower.rads),
                )
            }
            _ => x.clone(),
        }
    }
}

const CACHE_LIMIT: usize = 4096;

fn adjoin_cache() -> &'static Mutex<HashMap<(u64, Key), Arc<Tower>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, Key), Arc<Tower>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn merge_cache() -> &'static Mutex<HashMap<(u64, u64), Arc<Merged>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Merged>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Result of bringing two elements into one field.
pub(crate) fn align(
    t1: &Arc<Tower>,
    x: &Elem,
    t2: &Arc<Tower>,
    y: &Elem,
) -> (Arc<Tower>, Elem, Elem) {
    if Arc::ptr_eq(t1, t2) || t2.is_prefix_of(t1) {
        return (t1.clone(), x.clone(), y.clone());
    }
    if t1.is_prefix_of(t2) {
        return (t2.clone(), x.clone(), y.clone());
    }
    if t1.len() >= t2.len() {
        let m = merge(t1, t2);
        let y2 = m.embed(y);
        (m.tower.clone(), x.clone(), y2)
    } else {
        let m = merge(t2, t1);
        let x2 = m.embed(x);
        (m.tower.clone(), x2, y.clone())
    }
}

/// Extends `base` by the radicals of `other` not already present.
pub(crate) fn merge(base: &Arc<Tower>, other: &Arc<Tower>) -> Arc<Merged> {
    let key = (base.id, other.id);
    if let Some(m) = merge_cache().lock().unwrap().get(&key) {
        return m.clone();
    }
    let shared = base.common_prefix(other);
    let mut merged = Merged {
        tower: base.clone(),
        shared,
        images: Vec::new(),
    };
    for rad in &other.rads[shared..] {
        let radicand = merged.embed(&rad.radicand);
        let tower = merged.tower.clone();
        let image = match sqrt_within(&radicand, &tower.rads, tower.len()) {
            Some(root) => {
                if sign(&root, &tower.rads) < 0 {
                    neg(&root)
                } else {
                    root
                }
            }
            None => {
                merged.tower = tower.adjoin(radicand);
                Elem::radical(tower.len())
            }
        };
        merged.images.push(image);
    }
    let merged = Arc::new(merged);
    let mut cache = merge_cache().lock().unwrap();
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    cache.insert(key, merged.clone());
    merged
}
