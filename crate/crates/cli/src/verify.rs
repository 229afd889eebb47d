//! Property suites behind `seaweed verify`.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use seaweed::compositions::all_pairs;
use seaweed::enumeration::{census_c22, census_cnk, CensusLimits};
use seaweed::formulas::{
    c21, c22, c_diag1, c_diag2, c_diag3, case_terms, euler_phi, gcd_index_2parts, gcd_index_3parts,
    lemma32_sum, recursion_check, IdentityAudit,
};
use seaweed::genfunc::{builtin_gfs, one_minus_two_x};
use seaweed::meander::{seaweed_dimension, seaweed_index};
use seaweed::winding::{homotopy_index, parse_signature, wind_down};
use seaweed::{golden, ExactCount, ExactInt, Oracle, Result, SeaweedType, TableKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Closed forms, long sum, C21/C22 counts, totient and summation identities.
    Formulas,
    /// Built-in generating functions against closed forms and the reference C(n,k) table.
    Gf,
    /// `50 C(n,n-1) + 8 C(n+1,n-1) + 2 C(n+4,n+1) = C(n+5,n+2)` for n = 1..25.
    Recursion,
    /// gcd index formulas against the meander oracle.
    Gcd,
    /// Winding-down against the meander index.
    Winding,
    /// Every suite above.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Gf => "gf",
            Suite::Recursion => "recursion",
            Suite::Gcd => "gcd",
            Suite::Winding => "winding",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Formulas,
                Suite::Gf,
                Suite::Recursion,
                Suite::Gcd,
                Suite::Winding,
            ],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerifySuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl VerifySuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn elapsed(&self) -> Duration {
        self.checks.iter().map(|c| c.elapsed).sum()
    }
}

impl fmt::Display for VerifySuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(
                f,
                "  {}  {}: expected {}, actual {} ({:.1} ms)",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual,
                c.elapsed.as_secs_f64() * 1e3
            )?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            f,
            "{}: {}/{} checks passed in {:.2} s",
            self.suite,
            passed,
            self.checks.len(),
            self.elapsed().as_secs_f64()
        )
    }
}

/// Counted comparisons: `Ok(n)` when all `n` agree, otherwise the first disagreement.
struct Tally {
    total: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            total: 0,
            failures: 0,
            first: None,
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        self.total += 1;
        if expected != actual {
            self.failures += 1;
            self.first
                .get_or_insert_with(|| format!("{}: expected {expected}, got {actual}", what()));
        }
    }

    fn outcome(self) -> (bool, String, String) {
        let expected = format!("all {} agree", self.total);
        let actual = match self.first {
            None => expected.clone(),
            Some(first) => format!("{} of {} differ; first {first}", self.failures, self.total),
        };
        (self.failures == 0, expected, actual)
    }
}

fn timed(name: &str, body: impl FnOnce() -> Result<(bool, String, String)>) -> Check {
    let start = Instant::now();
    let (passed, expected, actual) = match body() {
        Ok(o) => o,
        Err(e) => (false, "no error".into(), format!("error: {e}")),
    };
    Check {
        name: name.to_string(),
        passed,
        expected,
        actual,
        elapsed: start.elapsed(),
    }
}

fn tallied(name: &str, body: impl FnOnce(&mut Tally) -> Result<()>) -> Check {
    timed(name, || {
        let mut t = Tally::new();
        body(&mut t)?;
        Ok(t.outcome())
    })
}

fn exact(name: &str, expected: impl fmt::Display, body: impl FnOnce() -> Result<String>) -> Check {
    let expected = expected.to_string();
    timed(name, || {
        let actual = body()?;
        Ok((actual == expected, expected, actual))
    })
}

pub fn run(suite: Suite, workers: usize) -> Vec<VerifySuiteReport> {
    suite
        .members()
        .into_iter()
        .map(|s| VerifySuiteReport {
            suite: s.name(),
            checks: match s {
                Suite::Formulas => formulas(workers),
                Suite::Gf => gf(),
                Suite::Recursion => recursion(),
                Suite::Gcd => gcd(),
                Suite::Winding => winding(),
                Suite::All => unreachable!(),
            },
        })
        .collect()
}

fn st(text: &str) -> SeaweedType {
    text.parse().expect("built-in example parses")
}

fn formulas(workers: usize) -> Vec<Check> {
    let limits = CensusLimits::default();
    let mut checks = vec![
        tallied("diagonals vs census, n <= 12", |t| {
            for n in 1..=12u32 {
                let row = census_cnk(n, workers, &limits)?;
                let last = n as usize - 1;
                t.eq(
                    || format!("C({n},{})", n - 1),
                    c_diag1::<u64>(n)?,
                    row[last],
                );
                if n >= 2 {
                    t.eq(
                        || format!("C({n},{})", n - 2),
                        c_diag2::<u64>(n)?,
                        row[last - 1],
                    );
                }
                if n >= 3 {
                    t.eq(
                        || format!("C({n},{})", n - 3),
                        c_diag3::<u64>(n)?,
                        row[last - 2],
                    );
                }
            }
            Ok(())
        }),
        tallied("long sum vs C(n,n-3), 4 <= n <= 25", |t| {
            for n in 4..=25 {
                t.eq(
                    || format!("n={n}"),
                    c_diag3::<ExactCount>(n)?,
                    lemma32_sum(n)?,
                );
            }
            Ok(())
        }),
        exact(
            "long sum at n = 3 with empty sums (C(3,0) is 6)",
            11,
            || Ok(lemma32_sum::<u64>(3)?.to_string()),
        ),
        tallied(
            "case contributions regroup the long sum, 3 <= n <= 30",
            |t| {
                for n in 3..=30 {
                    let total: ExactCount = case_terms::<ExactCount>(n)?
                        .into_iter()
                        .map(|c| c.value)
                        .sum();
                    t.eq(|| format!("n={n}"), lemma32_sum::<ExactCount>(n)?, total);
                }
                Ok(())
            },
        ),
        tallied("C21 formula vs gcd count, n <= 60", |t| {
            for n in 2..=60u32 {
                for k in 0..n {
                    let brute = (1..n).filter(|&a| a.gcd(&n) == k + 1).count() as u64;
                    t.eq(|| format!("C21({n},{k})"), brute, c21::<u64>(n, k)?);
                }
            }
            Ok(())
        }),
        tallied("C22 formula vs gcd count, n <= 40", |t| {
            for n in 2..=40u32 {
                let row = census_c22(n, Oracle::Gcd, &limits)?;
                for k in 0..n {
                    t.eq(
                        || format!("C22({n},{k})"),
                        row[k as usize],
                        c22::<u64>(n, k)?,
                    );
                }
            }
            Ok(())
        }),
        tallied("C22 gcd oracle vs meander oracle, n <= 14", |t| {
            for n in 2..=14u32 {
                let gcd = census_c22(n, Oracle::Gcd, &limits)?;
                let meander = census_c22(n, Oracle::Meander, &limits)?;
                for k in 0..n as usize {
                    t.eq(|| format!("C22({n},{k})"), gcd[k], meander[k]);
                }
            }
            Ok(())
        }),
        tallied(
            "sum of s < t coprime to t is t phi(t)/2, 3 <= t <= 200",
            |t| {
                for n in 3..=200u64 {
                    let sum: u64 = (1..n).filter(|s| s.gcd(&n) == 1).sum();
                    t.eq(|| format!("t={n}"), n * euler_phi(n) / 2, sum);
                }
                Ok(())
            },
        ),
    ];
    checks.extend(identity_checks());
    checks
}

fn identity_checks() -> Vec<Check> {
    let start = Instant::now();
    let audit = IdentityAudit::run(30);
    let elapsed = start.elapsed();
    let rows = |name: &str, rows: &[seaweed::formulas::IdentityRow]| {
        let mut t = Tally::new();
        for r in rows {
            t.eq(|| format!("n={}", r.n), &r.rhs, &r.lhs);
        }
        let (passed, expected, actual) = t.outcome();
        Check {
            name: name.into(),
            passed,
            expected,
            actual,
            elapsed,
        }
    };
    let first = audit.first_printed_failure();
    vec![
        rows("sum (n-k) 2^k = 2^(n+1) - 2n - 2, n = 1..30", &audit.k2k),
        rows(
            "sum k(n-k) 2^(n-k-1) = (n-3) 2^n + n + 3, n = 1..30",
            &audit.k2_2k_fitted,
        ),
        Check {
            name: "printed form 4 - 3*2^n + n*2^n first differs at".into(),
            passed: first == Some(2),
            expected: "n=2".into(),
            actual: first.map_or("never".into(), |n| format!("n={n}")),
            elapsed,
        },
    ]
}

fn gf() -> Vec<Check> {
    let gfs = builtin_gfs::<ExactInt>();
    let closed = |j: usize, n: u32| -> Result<BigInt> {
        if n as usize <= j {
            return Ok(BigInt::from(0));
        }
        let v: BigUint = match j {
            0 => c_diag1(n)?,
            1 => c_diag2(n)?,
            _ => c_diag3(n)?,
        };
        Ok(v.into())
    };
    let mut checks = vec![tallied("denominators are (1-2x)^m, m = 1, 2, 3", |t| {
        for (j, g) in gfs.iter().enumerate() {
            let expected = one_minus_two_x::<ExactInt>().pow(j as u32 + 1);
            t.eq(
                || g.name.to_string(),
                expected.to_string(),
                g.gf.denominator().to_string(),
            );
        }
        Ok(())
    })];
    for (j, g) in gfs.iter().enumerate() {
        checks.push(tallied(
            &format!("{} series vs closed form, n <= 30", g.name),
            |t| {
                for (n, c) in g.gf.coefficients(30).into_iter().enumerate() {
                    t.eq(|| format!("x^{n}"), closed(j, n as u32)?, c);
                }
                Ok(())
            },
        ));
    }
    checks.push(tallied("recurrence vs long division, order 50", |t| {
        for g in &gfs {
            let a = g.gf.coefficients(50);
            let b = g.gf.coefficients_by_long_division(50);
            for (n, (x, y)) in a.iter().zip(&b).enumerate() {
                t.eq(|| format!("{} x^{n}", g.name), x, y);
            }
        }
        Ok(())
    }));
    checks.push(tallied("series vs reference C(n,k) diagonals, n <= 10", |t| {
        let table = golden::table(TableKind::Cnk);
        for (j, g) in gfs.iter().enumerate() {
            let coeffs = g.gf.coefficients(10);
            for n in (j as u32 + 1)..=10 {
                let cell = table.get(n, n - 1 - j as u32).unwrap_or(0);
                t.eq(
                    || format!("{} n={n}", g.name),
                    BigInt::from(cell),
                    coeffs[n as usize].clone(),
                );
            }
        }
        Ok(())
    }));
    checks
}

fn recursion() -> Vec<Check> {
    vec![tallied(
        "50 C(n,n-1) + 8 C(n+1,n-1) + 2 C(n+4,n+1) = C(n+5,n+2), n = 1..25",
        |t| {
            for n in 1..=25 {
                t.eq(|| format!("n={n}"), true, recursion_check::<ExactCount>(n)?);
            }
            Ok(())
        },
    )]
}

fn gcd() -> Vec<Check> {
    let index = |top: &[u32], bottom: &[u32]| -> Result<u64> {
        Ok(seaweed_index(&SeaweedType::from_parts(top, bottom)?))
    };
    vec![
        tallied("gcd(a,b) - 1 vs a|b/n, a+b <= 40", |t| {
            for n in 2..=40u32 {
                for a in 1..n {
                    let b = n - a;
                    t.eq(
                        || format!("{a}|{b}/{n}"),
                        index(&[a, b], &[n])?,
                        gcd_index_2parts(a.into(), b.into()),
                    );
                }
            }
            Ok(())
        }),
        tallied("gcd(a+b,b+c) - 1 vs a|b|c/n, a+b+c <= 25", |t| {
            for n in 3..=25u32 {
                for a in 1..n {
                    for b in 1..n - a {
                        let c = n - a - b;
                        let f = gcd_index_3parts(a.into(), b.into(), c.into());
                        t.eq(|| format!("{a}|{b}|{c}/{n}"), index(&[a, b, c], &[n])?, f);
                    }
                }
            }
            Ok(())
        }),
        tallied("gcd(a+b,b+c) - 1 vs a|b/c|d, a+b+c <= 25", |t| {
            for a in 1..25u32 {
                for b in 1..25 - a {
                    for c in 1..(a + b).min(26 - a - b) {
                        let d = a + b - c;
                        let f = gcd_index_3parts(a.into(), b.into(), c.into());
                        t.eq(|| format!("{a}|{b}/{c}|{d}"), index(&[a, b], &[c, d])?, f);
                    }
                }
            }
            Ok(())
        }),
    ]
}

fn winding() -> Vec<Check> {
    vec![
        tallied("homotopy index = meander index, all pairs n <= 10", |t| {
            for n in 1..=10 {
                for p in all_pairs(n) {
                    let (_, h) = wind_down(&p);
                    t.eq(|| p.to_string(), seaweed_index(&p), homotopy_index(&h)?);
                }
            }
            Ok(())
        }),
        tallied("signatures reparse to themselves, all pairs n <= 8", |t| {
            for n in 1..=8 {
                for p in all_pairs(n) {
                    let (sig, _) = wind_down(&p);
                    let text = sig.to_string();
                    t.eq(
                        || p.to_string(),
                        text.clone(),
                        parse_signature(&text)?.to_string(),
                    );
                }
            }
            Ok(())
        }),
        exact(
            "15/2|5|1|5|2 winds down to",
            "PPC(1)C(5)C(2) H(1,5,2)",
            || {
                let (sig, h) = wind_down(&st("15/2|5|1|5|2"));
                Ok(format!("{sig} {h}"))
            },
        ),
        exact(
            "5|3/3|3|2 vs 4|4/2|4|2",
            "H(1,1) H(2), index 1 1, dimension 27 27",
            || {
                let (a, b) = (st("5|3/3|3|2"), st("4|4/2|4|2"));
                Ok(format!(
                    "{} {}, index {} {}, dimension {} {}",
                    wind_down(&a).1,
                    wind_down(&b).1,
                    seaweed_index(&a),
                    seaweed_index(&b),
                    seaweed_dimension(&a),
                    seaweed_dimension(&b)
                ))
            },
        ),
    ]
}

/// All reports, one after another.
pub fn render(reports: &[VerifySuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        write!(out, "{r}").unwrap();
    }
    if reports.len() > 1 {
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.suite)
            .collect();
        if failed.is_empty() {
            writeln!(out, "all suites passed").unwrap();
        } else {
            writeln!(out, "failed suites: {}", failed.join(", ")).unwrap();
        }
    }
    out
}
