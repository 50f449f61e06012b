//! Built-in verification suite behind `kzero verify`.
//!
//! Every grid point `(g, deg E, deg Q)` is checked independently, so the
//! grid is fanned out over a thread pool.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::base::{euler_form_base, BaseSpace, K0Class};
use crate::lattice::IntMatrix;
use crate::ruled::{IntersectionLattice, RuledSurface, SurfaceClass};
use crate::series::{hilbert_coeffs_ruled, series_invert};

/// Euler pairing under test.
pub type EulerForm = fn(&RuledSurface, &SurfaceClass, &SurfaceClass) -> BigInt;

pub const HILBERT_ORDER: usize = 50;

/// Grid `g in [0, genus_max]`, `deg E, deg Q in [-degree_max, degree_max]`.
/// A negative bound gives an empty grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub genus_max: i64,
    pub degree_max: i64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            genus_max: 5,
            degree_max: 5,
        }
    }
}

impl Grid {
    pub fn points(&self) -> Vec<(u64, i64, i64)> {
        if self.genus_max < 0 || self.degree_max < 0 {
            return Vec::new();
        }
        let d = self.degree_max;
        let mut pts = Vec::new();
        for g in 0..=self.genus_max as u64 {
            for de in -d..=d {
                for dq in -d..=d {
                    pts.push((g, de, dq));
                }
            }
        }
        pts
    }
}

impl std::str::FromStr for Grid {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (g, d) = s
            .split_once(',')
            .ok_or_else(|| format!("expected GMAX,DMAX, got {s:?}"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad grid bound {x:?}: {e}"))
        };
        Ok(Grid {
            genus_max: parse(g)?,
            degree_max: parse(d)?,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    /// First few failure messages.
    pub samples: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub points: usize,
    pub checks: BTreeMap<&'static str, CheckTally>,
}

impl VerifySummary {
    pub fn passed(&self) -> usize {
        self.checks.values().map(|t| t.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.checks.values().map(|t| t.failed).sum()
    }

    /// 0 when nothing failed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed() == 0 {
            0
        } else {
            2
        }
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "grid points: {}", self.points)?;
        for (name, t) in &self.checks {
            let status = if t.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "[{status}] {name:<28} passed {:>6}  failed {:>4}",
                t.passed, t.failed
            )?;
            for s in &t.samples {
                writeln!(f, "         {s}")?;
            }
        }
        write!(
            f,
            "total: {} passed, {} failed",
            self.passed(),
            self.failed()
        )
    }
}

type Outcome = (&'static str, Result<(), String>);

fn expect_eq<T: PartialEq + fmt::Debug>(
    name: &'static str,
    what: impl FnOnce() -> String,
    got: T,
    want: T,
) -> Outcome {
    if got == want {
        (name, Ok(()))
    } else {
        (name, Err(format!("{}: got {got:?}, want {want:?}", what())))
    }
}

fn check_point(euler: EulerForm, g: u64, de: i64, dq: i64) -> Vec<Outcome> {
    let s = RuledSurface::from_degrees(g, de, dq);
    let at = move || format!("g={g} dE={de} dQ={dq}");
    let pair = |a: &SurfaceClass, b: &SurfaceClass| euler(&s, a, b);
    let meet = |a: &SurfaceClass, b: &SurfaceClass| -pair(a, b);
    let big = BigInt::from;
    let mut out = Vec::new();

    let base = BaseSpace::curve(g);
    let (o, p) = (K0Class::one(), K0Class::point());
    let table = [
        euler_form_base(&o, &o, base),
        euler_form_base(&o, &p, base),
        euler_form_base(&p, &o, base),
        euler_form_base(&p, &p, base),
    ];
    out.push(expect_eq(
        "curve euler table",
        at,
        table,
        [big(1 - g as i64), big(1), big(-1), big(0)],
    ));

    let f = s.fiber_class();
    let h = s.section_class_h();
    let got = [meet(&f, &f), meet(&f, &h), meet(&h, &f), meet(&h, &h)];
    out.push(expect_eq(
        "intersection identities",
        at,
        got,
        [big(0), big(1), big(1), big(de)],
    ));

    let o = s.structure_class(0);
    for n in -1..=10 {
        out.push(expect_eq(
            "euler(O, fiber(n)) = n+1",
            || format!("{} n={n}", at()),
            pair(&o, &f.twist(n)),
            big(n + 1),
        ));
    }

    for (a, b) in [(&f, &h), (&h, &h), (&o, &f), (&h, &o)] {
        for k in [-3, -1, 2, 4] {
            out.push(expect_eq(
                "twist invariance",
                || format!("{} k={k}", at()),
                pair(&a.shifted(k), &b.shifted(k)),
                pair(a, b),
            ));
        }
    }

    let b = hilbert_coeffs_ruled(s.e(), s.q(), HILBERT_ORDER).expect("ranks fixed");
    let ranks_ok = b
        .iter()
        .enumerate()
        .all(|(n, c)| c.rank == BigInt::from(n as i64 + 1));
    out.push(expect_eq("hilbert rank law", at, ranks_ok, true));

    let relation = s.bundle_spec().relation_poly();
    match series_invert(&relation, HILBERT_ORDER) {
        Ok(inv) => {
            out.push(expect_eq(
                "inverse series = recursion",
                at,
                inv.coeffs(),
                &b[..],
            ));
            let prod = (&relation * &inv.to_poly()).truncate(HILBERT_ORDER);
            out.push(expect_eq("inversion identity", at, prod.is_one(), true));
        }
        Err(e) => out.push(("inversion identity", Err(format!("{}: {e}", at())))),
    }

    let lattice = IntersectionLattice::from_pairing(s.f1_basis(), pair);
    let v = &s.f1_basis()[1];
    let rad = lattice.radical_classes();
    let radical_ok = rad.len() == 1 && (rad[0] == *v || rad[0] == v.scale(-1));
    out.push(expect_eq("radical = span(fiber.H)", at, radical_ok, true));
    out.push(expect_eq(
        "NS intersection form",
        at,
        lattice.quotient_gram.clone(),
        IntMatrix::from_rows(&[vec![0, 1], vec![1, de]]),
    ));
    out.push(expect_eq(
        "NS determinant",
        at,
        lattice.quotient_gram.determinant(),
        big(-1),
    ));

    // radical law on rank-zero classes built from the F1 basis and twists
    let x = &(&f.twist(3) - &f) + &h.shifted(-2);
    out.push(expect_eq(
        "radical law",
        at,
        (pair(&x, v), pair(v, &x)),
        (big(0), big(0)),
    ));

    out.push(expect_eq("e-invariant", at, s.e_invariant(), -meet(&h, &h)));
    out
}

pub fn verify_with(grid: Grid, euler: EulerForm) -> VerifySummary {
    let points = grid.points();
    let outcomes: Vec<Outcome> = points
        .par_iter()
        .flat_map_iter(|&(g, de, dq)| check_point(euler, g, de, dq))
        .collect();

    let mut summary = VerifySummary {
        points: points.len(),
        ..Default::default()
    };
    for (name, r) in outcomes {
        let tally = summary.checks.entry(name).or_default();
        match r {
            Ok(()) => tally.passed += 1,
            Err(msg) => {
                tally.failed += 1;
                if tally.samples.len() < 3 {
                    tally.samples.push(msg);
                }
            }
        }
    }
    summary
}

pub fn verify(grid: Grid) -> VerifySummary {
    verify_with(grid, RuledSurface::euler_form)
}
