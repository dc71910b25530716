//! Bounded verification suites, rational brackets for `zeta(s)`, and the
//! `(d - 1) / phi(d) = l` scan over squarefree multiples.
//!
//! Every suite checks one statement about `phi_K` on all inputs up to a bound
//! and reports each failing input as a [`Witness`]. Reports are deterministic
//! for fixed inputs; only `elapsed` varies between runs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::arith::{self, Sieve};
use crate::classify::{record_from_factors, RANGE_CAP};
use crate::error::{Error, Result};
use crate::field::QuadraticField;
use crate::rational::RationalValue;
use crate::residue::{self, crt_map, phi_from_factors, ResidueRing, DEFAULT_ORACLE_CAP};
use crate::scan;
use crate::splitting::{splitting_type_unchecked, SplittingType};

/// Largest number of partial-sum terms [`zeta_bounds`] will accumulate.
pub const ZETA_MAX_TERMS: u64 = 20_000;

/// `lower <= zeta(s) <= upper`, both exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaBound {
    pub s: u32,
    /// Number of partial-sum terms behind `lower`.
    pub terms: u64,
    pub lower: RationalValue,
    pub upper: RationalValue,
}

impl ZetaBound {
    pub fn width(&self) -> RationalValue {
        &self.upper - &self.lower
    }
}

/// Bracket `zeta(s)` between the partial sum `sum_{k <= N} k^-s` and that sum
/// plus the integral tail `1 / ((s - 1) N^(s-1))`, with `N` the least value
/// making the tail at most `tol`.
pub fn zeta_bounds(s: u32, tol: &RationalValue) -> Result<ZetaBound> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta bracket needs s >= 2, got {s}"
        )));
    }
    if !tol.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let tail =
        |n: u64| RationalValue::new(1, BigInt::from(s - 1) * BigInt::from(n).pow(s - 1)).unwrap();

    // tail(n) is decreasing, so find the least n with tail(n) <= tol by
    // doubling then bisection.
    let mut hi = 1u64;
    while tail(hi) > *tol {
        if hi > ZETA_MAX_TERMS {
            return Err(Error::BudgetExceeded {
                what: "zeta terms",
                value: hi,
                cap: ZETA_MAX_TERMS,
            });
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if tail(mid) <= *tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let terms = hi;
    if terms > ZETA_MAX_TERMS {
        return Err(Error::BudgetExceeded {
            what: "zeta terms",
            value: terms,
            cap: ZETA_MAX_TERMS,
        });
    }

    // sum over a common denominator lcm(1..N)^s, reduced once at the end
    let lcm = (1..=terms).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)));
    let common: BigInt = Pow::pow(&lcm, s);
    let mut numer = BigInt::zero();
    for k in 1..=terms {
        numer += &common / BigInt::from(k).pow(s);
    }
    let lower = RationalValue::new(numer, common)?;
    let upper = &lower + &tail(terms);
    Ok(ZetaBound {
        s,
        terms,
        lower,
        upper,
    })
}

/// A failing input, printable as `field=<m> key=value ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub field_m: Option<i64>,
    pub args: Vec<(&'static str, u64)>,
}

impl Witness {
    fn d(field: QuadraticField, d: u64) -> Self {
        Self {
            field_m: Some(field.m()),
            args: vec![("d", d)],
        }
    }

    fn pair(field: QuadraticField, m: u64, n: u64) -> Self {
        Self {
            field_m: Some(field.m()),
            args: vec![("m", m), ("n", n)],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some(m) = self.field_m {
            write!(f, "field={m}")?;
            first = false;
        }
        for (k, v) in &self.args {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite_name: String,
    pub field_m: Option<i64>,
    pub bound: u64,
    pub checked: u64,
    /// Sorted ascending; empty iff the suite passed.
    pub failures: Vec<Witness>,
    /// Informational findings, e.g. the first input separating two
    /// field-level properties.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Everything except `elapsed`, for determinism comparisons.
    pub fn fingerprint(&self) -> (String, Option<i64>, u64, u64, Vec<Witness>, Vec<String>) {
        (
            self.suite_name.clone(),
            self.field_m,
            self.bound,
            self.checked,
            self.failures.clone(),
            self.notes.clone(),
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field_m {
            Some(m) => m.to_string(),
            None => "-".into(),
        };
        writeln!(
            f,
            "suite {}: field={} bound={} checked={} failures={} {}",
            self.suite_name,
            field,
            self.bound,
            self.checked,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        for w in &self.failures {
            writeln!(f, "witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub threads: usize,
    /// Budget for suites that enumerate residue rings.
    pub oracle_cap: u64,
    /// Mixed suites run their exhaustive sub-check only up to this modulus.
    pub oracle_bound: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            oracle_cap: DEFAULT_ORACLE_CAP,
            oracle_bound: 60,
        }
    }
}

/// Registered verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Closed form equals exhaustive count of units.
    Oracle,
    /// `|Z_d|_K| = d^n`.
    Cardinality,
    /// `phi_K(mn) = phi_K(m) phi_K(n)` for coprime `m, n`.
    Multiplicativity,
    /// `phi(d) | phi_K(d)`.
    Embedding,
    /// `phi_K(d) = d^n - 1` iff `d` irreducible; strict below for the rest.
    Lemma1,
    /// `Z_d|_K` has no zero divisors iff `d` irreducible.
    FieldCriterion,
    /// Splitting type against root counts and unit counts.
    Splitting,
    /// Squarefree `d` realizable iff `phi_K(d) = prod (p^n - 1)`.
    Prop12,
    /// Realizable implies Lehmer, with the zeta-bound chain.
    Theorem1,
    /// A prime is normal iff `phi_K(p) | p^n - 1`.
    NormalPrime,
    /// Lehmer and normal with `phi(d) | d - 1` forces `d` prime.
    Theorem2,
    /// Realizable field iff Lehmer field with all primes normal.
    RealizableField,
    /// Realizable field iff strongly Lehmer field.
    Theorem3,
    /// Exhaustive CRT decomposition for all coprime pairs.
    Crt,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Oracle,
        Suite::Cardinality,
        Suite::Multiplicativity,
        Suite::Embedding,
        Suite::Lemma1,
        Suite::FieldCriterion,
        Suite::Splitting,
        Suite::Prop12,
        Suite::Theorem1,
        Suite::NormalPrime,
        Suite::Theorem2,
        Suite::RealizableField,
        Suite::Theorem3,
        Suite::Crt,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Cardinality => "cardinality",
            Suite::Multiplicativity => "multiplicativity",
            Suite::Embedding => "embedding",
            Suite::Lemma1 => "lemma1",
            Suite::FieldCriterion => "field-criterion",
            Suite::Splitting => "splitting",
            Suite::Prop12 => "prop12",
            Suite::Theorem1 => "theorem1",
            Suite::NormalPrime => "normal-prime",
            Suite::Theorem2 => "theorem2",
            Suite::RealizableField => "realizable-field",
            Suite::Theorem3 => "theorem3",
            Suite::Crt => "crt",
        }
    }

    fn needs_quadratic(&self) -> bool {
        matches!(
            self,
            Suite::Splitting | Suite::Theorem1 | Suite::RealizableField | Suite::Theorem3
        )
    }

    fn enumerates_rings(&self) -> bool {
        matches!(
            self,
            Suite::Oracle | Suite::Cardinality | Suite::FieldCriterion | Suite::Crt
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == key)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

enum Check {
    Skip,
    Pass,
    Fail(Witness),
}

impl Check {
    fn expect(ok: bool, witness: impl FnOnce() -> Witness) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(witness())
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<Witness>,
    notes: Vec<String>,
}

impl Tally {
    fn absorb(&mut self, checks: Vec<Check>) {
        for c in checks {
            match c {
                Check::Skip => {}
                Check::Pass => self.checked += 1,
                Check::Fail(w) => {
                    self.checked += 1;
                    self.failures.push(w);
                }
            }
        }
    }
}

fn tally_range<F>(lo: u64, hi: u64, threads: usize, f: F) -> Result<Tally>
where
    F: Fn(u64) -> Result<Check> + Sync + Send,
{
    let mut t = Tally::default();
    t.absorb(scan::map_range(lo, hi, threads, f)?);
    Ok(t)
}

/// Run one suite over `field` for all inputs up to `bound`.
pub fn run_suite(
    suite: Suite,
    field: QuadraticField,
    bound: u64,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    if suite.needs_quadratic() && field.is_rationals() {
        return Err(Error::DegreeOne);
    }
    if suite.enumerates_rings() && bound > opts.oracle_cap {
        return Err(Error::BudgetExceeded {
            what: "suite bound",
            value: bound,
            cap: opts.oracle_cap,
        });
    }
    if bound > RANGE_CAP {
        return Err(Error::BudgetExceeded {
            what: "suite bound",
            value: bound,
            cap: RANGE_CAP,
        });
    }
    let start = Instant::now();
    let sieve = Sieve::new(bound.max(2));
    let threads = opts.threads.max(1);
    let n = field.degree();
    let phi_k = |d: u64| phi_from_factors(field, &sieve.factorize(d));

    let mut tally = match suite {
        Suite::Oracle => tally_range(1, bound, threads, |d| {
            let oracle = residue::phi_oracle(field, d, opts.oracle_cap)?;
            Ok(Check::expect(oracle == phi_k(d), || Witness::d(field, d)))
        })?,

        Suite::Cardinality => tally_range(1, bound, threads, |d| {
            let classes: Vec<_> = residue::enumerate_residues(field, d, opts.oracle_cap)?.collect();
            let in_range = classes.iter().all(|x| x.a() < d && x.b() < d);
            let distinct = classes
                .iter()
                .map(|x| (x.a(), x.b()))
                .collect::<HashSet<_>>()
                .len();
            let expected = d.pow(n) as usize;
            Ok(Check::expect(
                in_range && classes.len() == expected && distinct == expected,
                || Witness::d(field, d),
            ))
        })?,

        Suite::Multiplicativity => {
            let pairs = scan::map_range(2, bound / 2, threads, |m| {
                let mut out = Vec::new();
                let mut k = m + 1;
                while m * k <= bound {
                    if arith::gcd(m, k) == 1 {
                        let ok = phi_k(m * k) == phi_k(m) * phi_k(k);
                        out.push(Check::expect(ok, || Witness::pair(field, m, k)));
                    }
                    k += 1;
                }
                Ok(out)
            })?;
            let mut t = Tally::default();
            t.absorb(pairs.into_iter().flatten().collect());
            t
        }

        Suite::Embedding => tally_range(1, bound, threads, |d| {
            let phi = arith::euler_phi_factors(&sieve.factorize(d));
            Ok(Check::expect(phi_k(d) % phi == 0, || Witness::d(field, d)))
        })?,

        Suite::Lemma1 => tally_range(2, bound, threads, |d| {
            let top = field.max_totient(d);
            let value = phi_k(d);
            let irreducible = crate::splitting::is_irreducible_nat(field, d);
            let mut ok = (value == top) == irreducible && value <= top;
            if !sieve.is_prime(d) {
                ok &= value < top;
            }
            if d <= opts.oracle_bound.min(opts.oracle_cap) {
                let oracle = residue::phi_oracle(field, d, opts.oracle_cap)?;
                ok &= (oracle == top) == irreducible;
            }
            Ok(Check::expect(ok, || Witness::d(field, d)))
        })?,

        Suite::FieldCriterion => tally_range(2, bound, threads, |d| {
            let ring = ResidueRing::new(field, d)?;
            let irreducible = crate::splitting::is_irreducible_nat(field, d);
            Ok(Check::expect(
                has_zero_divisor(&ring) != irreducible,
                || Witness::d(field, d),
            ))
        })?,

        Suite::Splitting => {
            let oracle_limit = 97.min(opts.oracle_cap);
            tally_range(2, bound, threads, |p| {
                if !sieve.is_prime(p) {
                    return Ok(Check::Skip);
                }
                let kind = splitting_type_unchecked(field, p);
                let mut ok = kind == root_count_type(field, p);
                if field.m() == -1 {
                    ok &= (kind == SplittingType::Inert) == (p % 4 == 3);
                }
                if p <= oracle_limit {
                    let units = residue::phi_oracle(field, p, opts.oracle_cap)?;
                    let expected = match kind {
                        SplittingType::Inert => p * p - 1,
                        SplittingType::Split => (p - 1) * (p - 1),
                        SplittingType::Ramified => p * (p - 1),
                    };
                    ok &= units == expected;
                }
                Ok(Check::expect(ok, || Witness::d(field, p)))
            })?
        }

        Suite::Prop12 => tally_range(1, bound, threads, |d| {
            let factors = sieve.factorize(d);
            if !arith::is_squarefree_factors(&factors) {
                return Ok(Check::Skip);
            }
            let product: u64 = factors.iter().map(|&(p, _)| p.pow(n) - 1).product();
            let realizable = field.is_rationals()
                || factors
                    .iter()
                    .all(|&(p, _)| splitting_type_unchecked(field, p) == SplittingType::Inert);
            let ok = realizable == (phi_from_factors(field, &factors) == product);
            Ok(Check::expect(ok, || Witness::d(field, d)))
        })?,

        Suite::Theorem1 => {
            let zeta = zeta_bounds(n, &RationalValue::new(1, 100)?)?;
            let two = RationalValue::integer(2);
            let mut t = tally_range(2, bound, threads, |d| {
                let factors = sieve.factorize(d);
                if !arith::is_squarefree_factors(&factors) {
                    return Ok(Check::Skip);
                }
                let record = record_from_factors(field, d, &factors)?;
                if !record.realizable {
                    return Ok(Check::Skip);
                }
                // (d^n - 1) / phi_K(d) <= prod_{p | d} 1 / (1 - p^-n) <= zeta upper < 2
                let ratio = RationalValue::new(field.max_totient(d), record.phi_k)?;
                let euler = factors.iter().fold(RationalValue::one(), |acc, &(p, _)| {
                    let pn = p.pow(n);
                    &acc * &RationalValue::new(pn, pn - 1).unwrap()
                });
                let chain = ratio <= euler && euler <= zeta.upper && zeta.upper < two;
                Ok(Check::expect(record.lehmer && chain, || {
                    Witness::d(field, d)
                }))
            })?;
            t.notes.push(format!(
                "zeta({n}) <= {:.6} from {} terms; certified < 2: {}",
                zeta.upper.to_f64(),
                zeta.terms,
                zeta.upper < two
            ));
            t
        }

        Suite::NormalPrime => tally_range(2, bound, threads, |p| {
            if !sieve.is_prime(p) {
                return Ok(Check::Skip);
            }
            let record = record_from_factors(field, p, &[(p, 1)])?;
            Ok(Check::expect(record.normal == record.divides, || {
                Witness::d(field, p)
            }))
        })?,

        Suite::Theorem2 => tally_range(2, bound, threads, |d| {
            let factors = sieve.factorize(d);
            let record = record_from_factors(field, d, &factors)?;
            let rational = record_from_factors(QuadraticField::rationals(), d, &factors)?;
            let prime = sieve.is_prime(d);
            // if part: Lehmer and normal over K with phi(d) | d - 1 forces d prime
            let mut ok = !(record.lehmer && record.normal && (d - 1) % record.phi == 0) || prime;
            // only-if part, with K = Q as the witness field
            ok &= !rational.lehmer || rational.normal;
            Ok(Check::expect(ok, || Witness::d(field, d)))
        })?,

        Suite::RealizableField => {
            field_level_scan(field, &sieve, bound, threads, FieldLevel::Normal)?
        }

        Suite::Theorem3 => {
            field_level_scan(field, &sieve, bound, threads, FieldLevel::StronglyLehmer)?
        }

        Suite::Crt => {
            let mut t = Tally::default();
            for m in 2..=bound / 3 {
                let mut k = m + 1;
                while m * k <= bound {
                    if arith::gcd(m, k) == 1 {
                        let r = crt_suite(field, m, k, opts)?;
                        t.checked += 1;
                        if !r.passed() {
                            t.failures.push(Witness::pair(field, m, k));
                        }
                    }
                    k += 1;
                }
            }
            t
        }
    };
    tally.failures.sort();
    Ok(VerificationReport {
        suite_name: suite.name().to_string(),
        field_m: Some(field.m()),
        bound,
        checked: tally.checked,
        failures: tally.failures,
        notes: tally.notes,
        elapsed: start.elapsed(),
    })
}

/// Look up a suite by name and run it.
pub fn run_named_suite(
    name: &str,
    field: QuadraticField,
    bound: u64,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    run_suite(name.parse()?, field, bound, opts)
}

fn has_zero_divisor(ring: &ResidueRing) -> bool {
    let size = ring.cardinality();
    (1..size).any(|i| {
        let x = ring.nth(i);
        (1..size).any(|j| ring.mul_unchecked(&x, &ring.nth(j)).is_zero())
    })
}

/// Splitting type from the number of roots of the minimal polynomial of `w`
/// modulo `p`. Valid because `O_K = Z[w]`.
fn root_count_type(field: QuadraticField, p: u64) -> SplittingType {
    let (t, c) = field.omega_relation();
    let (t, c) = (t.rem_euclid(p as i64) as u64, c.rem_euclid(p as i64) as u64);
    // x^2 - t x - c = 0 (mod p)
    let roots = (0..p)
        .filter(|&x| {
            let lhs = arith::mul_mod(x, x, p);
            let rhs = (arith::mul_mod(t, x, p) + c) % p;
            lhs == rhs
        })
        .count();
    // a quadratic with exactly one distinct root has it doubled
    match roots {
        0 => SplittingType::Inert,
        1 => SplittingType::Ramified,
        _ => SplittingType::Split,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FieldLevel {
    /// Lehmer for all d and normal for all primes.
    Normal,
    /// Strongly Lehmer for all d.
    StronglyLehmer,
}

// Field-level equivalences, bounded: compare "every d <= bound is realizable"
// with the other side, check the pointwise implications that the proofs use,
// and note the first inputs that break each side.
fn field_level_scan(
    field: QuadraticField,
    sieve: &Sieve,
    bound: u64,
    threads: usize,
    kind: FieldLevel,
) -> Result<Tally> {
    let records = scan::map_range(2, bound, threads, |d| {
        record_from_factors(field, d, &sieve.factorize(d))
    })?;
    let mut t = Tally::default();
    let first = |pred: &dyn Fn(&crate::ClassificationRecord) -> bool| {
        records.iter().find(|r| pred(r)).map(|r| r.d)
    };
    for r in &records {
        let prime = sieve.is_prime(r.d);
        let ok = match kind {
            FieldLevel::Normal => !prime || r.realizable == (r.lehmer && r.normal),
            FieldLevel::StronglyLehmer => {
                (!r.realizable || r.strongly_lehmer)
                    && (!prime || r.realizable == r.strongly_lehmer)
            }
        };
        t.checked += 1;
        if !ok {
            t.failures.push(Witness::d(field, r.d));
        }
    }
    let not_realizable = first(&|r| !r.realizable);
    let other = match kind {
        FieldLevel::Normal => {
            let not_lehmer = first(&|r| !r.lehmer);
            let not_normal_prime = first(&|r| sieve.is_prime(r.d) && !r.normal);
            t.notes
                .push(format!("first non-Lehmer d: {}", show(not_lehmer)));
            t.notes.push(format!(
                "first non-normal prime: {}",
                show(not_normal_prime)
            ));
            match (not_lehmer, not_normal_prime) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            }
        }
        FieldLevel::StronglyLehmer => {
            let not_strong = first(&|r| !r.strongly_lehmer);
            t.notes
                .push(format!("first non-strongly-Lehmer d: {}", show(not_strong)));
            not_strong
        }
    };
    t.notes
        .push(format!("first non-realizable d: {}", show(not_realizable)));
    let separating = first(&|r| sieve.is_prime(r.d) && !r.realizable);
    t.notes
        .push(format!("first separating prime: {}", show(separating)));
    t.checked += 1;
    if not_realizable.is_none() != other.is_none() {
        t.failures.push(Witness {
            field_m: Some(field.m()),
            args: vec![("bound", bound)],
        });
    }
    Ok(t)
}

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "none".to_string(), |d| d.to_string())
}

/// Exhaustive check that reduction `Z_mn|_K -> Z_m|_K x Z_n|_K` is a ring
/// isomorphism that matches unit groups.
pub fn crt_suite(
    field: QuadraticField,
    m: u64,
    n: u64,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    if arith::gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let mn = m.checked_mul(n).ok_or(Error::Overflow("crt modulus"))?;
    if mn > opts.oracle_cap {
        return Err(Error::BudgetExceeded {
            what: "crt modulus",
            value: mn,
            cap: opts.oracle_cap,
        });
    }
    let start = Instant::now();
    let big = ResidueRing::new(field, mn)?;
    let left = ResidueRing::new(field, m)?;
    let right = ResidueRing::new(field, n)?;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let fail = |failures: &mut Vec<Witness>, x: u64, y: Option<u64>| {
        let mut args = vec![("m", m), ("n", n), ("x", x)];
        if let Some(y) = y {
            args.push(("y", y));
        }
        failures.push(Witness {
            field_m: Some(field.m()),
            args,
        });
    };

    let size = big.cardinality();
    let images: Vec<(usize, usize)> = big
        .iter()
        .map(|x| {
            let (l, r) = crt_map(field, m, n, &x)?;
            Ok((l.index(), r.index()))
        })
        .collect::<Result<_>>()?;

    // bijection: injective on equal-size finite sets
    let mut seen = vec![false; (left.cardinality() * right.cardinality()) as usize];
    let width = right.cardinality() as usize;
    for (i, &(l, r)) in images.iter().enumerate() {
        let slot = &mut seen[l * width + r];
        if *slot {
            fail(&mut failures, i as u64, None);
        }
        *slot = true;
    }
    if seen.len() as u64 != size || !seen.iter().all(|&s| s) {
        notes.push("image does not cover the product ring".into());
        fail(&mut failures, size, None);
    }

    // operation tables, exhaustive when small enough, otherwise against a
    // fixed stride through the ring
    const TABLE_BUDGET: u64 = 4_000_000;
    let stride = if size * size <= TABLE_BUDGET {
        1
    } else {
        (size * size).div_ceil(TABLE_BUDGET)
    };
    if stride > 1 {
        notes.push(format!(
            "operation tables checked on every {stride}th right operand"
        ));
    }
    let pair_image = |z: &crate::ResidueClass| {
        (
            left.class(z.a() as i128, z.b() as i128).index(),
            right.class(z.a() as i128, z.b() as i128).index(),
        )
    };
    for i in 0..size {
        let x = big.nth(i);
        let (xl, xr) = (
            left.nth(images[i as usize].0 as u64),
            right.nth(images[i as usize].1 as u64),
        );
        let mut j = 0;
        while j < size {
            let y = big.nth(j);
            let (yl, yr) = (
                left.nth(images[j as usize].0 as u64),
                right.nth(images[j as usize].1 as u64),
            );
            let sum = pair_image(&big.add_unchecked(&x, &y));
            let prod = pair_image(&big.mul_unchecked(&x, &y));
            let sum_ok = sum
                == (
                    left.add_unchecked(&xl, &yl).index(),
                    right.add_unchecked(&xr, &yr).index(),
                );
            let prod_ok = prod
                == (
                    left.mul_unchecked(&xl, &yl).index(),
                    right.mul_unchecked(&xr, &yr).index(),
                );
            if !(sum_ok && prod_ok) {
                fail(&mut failures, i, Some(j));
            }
            j += stride;
        }
    }

    // unit groups correspond and their orders multiply
    let units = residue::unit_table(field, mn, opts.oracle_cap)?;
    let units_l = residue::unit_table(field, m, opts.oracle_cap)?;
    let units_r = residue::unit_table(field, n, opts.oracle_cap)?;
    for (i, &(l, r)) in images.iter().enumerate() {
        if units[i] != (units_l[l] && units_r[r]) {
            fail(&mut failures, i as u64, None);
        }
    }
    let count = |t: &[bool]| t.iter().filter(|&&u| u).count() as u64;
    let (phi_mn, phi_m, phi_n) = (count(&units), count(&units_l), count(&units_r));
    notes.push(format!("units: {phi_mn} = {phi_m} * {phi_n}"));
    if phi_mn != phi_m * phi_n {
        fail(&mut failures, 0, None);
    }
    failures.sort();
    failures.dedup();
    Ok(VerificationReport {
        suite_name: "crt".into(),
        field_m: Some(field.m()),
        bound: mn,
        checked: size,
        failures,
        notes,
        elapsed: start.elapsed(),
    })
}

/// Result of [`ratio_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioScan {
    /// Squarefree multiples `d` of `w` with `(d - 1) / phi(d) = l`, ascending.
    pub matches: Vec<u64>,
    /// `l < w / phi(w)`, the hypothesis under which the set is finite.
    pub hypothesis_holds: bool,
}

pub fn ratio_scan(w: u64, l: &RationalValue, bound: u64, threads: usize) -> Result<RatioScan> {
    if w == 0 || !arith::is_squarefree(w) {
        return Err(Error::NotSquarefree(w as i64));
    }
    if bound < w {
        return Err(Error::InvalidArgument(format!(
            "bound {bound} is below w = {w}"
        )));
    }
    if bound > RANGE_CAP {
        return Err(Error::BudgetExceeded {
            what: "scan bound",
            value: bound,
            cap: RANGE_CAP,
        });
    }
    let hypothesis_holds = *l < RationalValue::new(w, arith::euler_phi(w))?;
    // (d - 1) / phi(d) has numerator and denominator below 2^32, so a target
    // that does not fit i128 can never match.
    let Some((num, den)) = l.to_i128_parts() else {
        return Ok(RatioScan {
            matches: Vec::new(),
            hypothesis_holds,
        });
    };
    let sieve = Sieve::new(bound);
    let matches = scan::filter_map_range(1, bound / w, threads, |k| {
        let d = w * k;
        let factors = sieve.factorize(d);
        if !arith::is_squarefree_factors(&factors) {
            return Ok(None);
        }
        let phi = arith::euler_phi_factors(&factors) as i128;
        Ok(((d as i128 - 1) * den == num * phi).then_some(d))
    })?;
    Ok(RatioScan {
        matches,
        hypothesis_holds,
    })
}
