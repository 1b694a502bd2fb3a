//! Suite orchestration: seeded runs, claim-anchored check reports, JSON and
//! text rendering, and CSV orbit dumps.
//!
//! Reports are deterministic: two runs with the same [`RunConfig`] produce
//! byte-identical JSON apart from the wall-time fields, because every check
//! draws from its own [`sample::stream`] keyed by `(seed, suite, check)`.

pub mod sample;

mod checks;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::actions::f1 as action_f1;
use crate::actions::f5 as action_f5;
use crate::quotients::{orbit_of, LensModel};
use crate::{Error, Result};

/// The named check suites, in their fixed stream order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    So3,
    Strata,
    Actions,
    Lens,
    Covers,
    Descent,
    Theorem,
    Obstruction,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Algebra,
            Suite::So3,
            Suite::Strata,
            Suite::Actions,
            Suite::Lens,
            Suite::Covers,
            Suite::Descent,
            Suite::Theorem,
            Suite::Obstruction,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::So3 => "so3",
            Suite::Strata => "strata",
            Suite::Actions => "actions",
            Suite::Lens => "lens",
            Suite::Covers => "covers",
            Suite::Descent => "descent",
            Suite::Theorem => "theorem",
            Suite::Obstruction => "obstruction",
        }
    }

    /// Position in the fixed suite order; part of the stream derivation, so
    /// a suite sees the same randomness whether it runs alone or with others.
    pub fn index(&self) -> u64 {
        match self {
            Suite::Algebra => 0,
            Suite::So3 => 1,
            Suite::Strata => 2,
            Suite::Actions => 3,
            Suite::Lens => 4,
            Suite::Covers => 5,
            Suite::Descent => 6,
            Suite::Theorem => 7,
            Suite::Obstruction => 8,
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(Suite::Algebra),
            "so3" => Ok(Suite::So3),
            "strata" => Ok(Suite::Strata),
            "actions" => Ok(Suite::Actions),
            "lens" => Ok(Suite::Lens),
            "covers" => Ok(Suite::Covers),
            "descent" => Ok(Suite::Descent),
            "theorem" => Ok(Suite::Theorem),
            "obstruction" => Ok(Suite::Obstruction),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Output format of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

/// Configuration of a verification run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    /// Tolerance for closed-form algebraic identities.
    pub tol_identity: f64,
    /// Tolerance for chart round trips and lifts, which compose
    /// normalisations and inverse trigonometry.
    pub tol_geometry: f64,
    pub suites: Vec<Suite>,
    pub format: ReportFormat,
    pub dump_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 10_000,
            tol_identity: 1e-11,
            tol_geometry: 1e-9,
            suites: Suite::all(),
            format: ReportFormat::Text,
            dump_path: None,
        }
    }
}

/// Result of a single named check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// Fragment of the mathematical claim the check certifies.
    pub anchor: String,
    pub samples: usize,
    pub max_error: f64,
    pub pass: bool,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Tolerances {
    pub identity: f64,
    pub geometry: f64,
}

/// Full report of a run; serialises to the stable JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub rng: String,
    pub suites: Vec<SuiteReport>,
    pub all_pass: bool,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "seed {}  samples {}  tol_identity {:e}  tol_geometry {:e}  rng {}\n",
            self.seed, self.samples, self.tolerances.identity, self.tolerances.geometry, self.rng
        ));
        let mut total = 0usize;
        let mut passed = 0usize;
        for suite in &self.suites {
            for check in &suite.checks {
                total += 1;
                if check.pass {
                    passed += 1;
                }
                out.push_str(&format!(
                    "{} {:<40} n={:<7} max_err={:<12.3e} {:>8.2}ms  {}\n",
                    if check.pass { " PASS" } else { " FAIL" },
                    format!("{}/{}", suite.name, check.name),
                    check.samples,
                    check.max_error,
                    check.wall_ms,
                    check.anchor,
                ));
            }
        }
        out.push_str(&format!(
            "result: {} ({passed}/{total} checks)\n",
            if self.all_pass { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Json => self.to_json(),
        }
    }
}

fn validate(config: &RunConfig) -> Result<()> {
    if config.samples == 0 {
        return Err(Error::OutOfRange {
            name: "samples",
            value: 0.0,
        });
    }
    // NaN fails both branches on purpose
    if config.tol_identity.is_nan() || config.tol_identity <= 0.0 {
        return Err(Error::OutOfRange {
            name: "tol_identity",
            value: config.tol_identity,
        });
    }
    if config.tol_geometry.is_nan() || config.tol_geometry <= 0.0 {
        return Err(Error::OutOfRange {
            name: "tol_geometry",
            value: config.tol_geometry,
        });
    }
    Ok(())
}

/// Runs the selected suites and assembles the report.
pub fn run(config: &RunConfig) -> Result<RunReport> {
    validate(config)?;
    let mut suites = Vec::with_capacity(config.suites.len());
    let mut all_pass = true;
    for suite in &config.suites {
        let defs = checks::checks_for(*suite);
        let mut reports = Vec::with_capacity(defs.len());
        for (idx, def) in defs.into_iter().enumerate() {
            let mut rng = sample::stream(config.seed, suite.index(), idx as u64);
            let start = Instant::now();
            let outcome = (def.run)(&mut rng, config);
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let tol = def.kind.tolerance(config);
            let pass = outcome.max_error < tol;
            all_pass &= pass;
            let name = match &outcome.detail {
                Some(detail) => format!("{}[{}]", def.name, detail),
                None => def.name.to_string(),
            };
            reports.push(CheckReport {
                name,
                anchor: def.anchor.to_string(),
                samples: outcome.samples,
                max_error: outcome.max_error,
                pass,
                wall_ms,
            });
        }
        suites.push(SuiteReport {
            name: suite.name().to_string(),
            checks: reports,
        });
    }
    Ok(RunReport {
        seed: config.seed,
        samples: config.samples,
        tolerances: Tolerances {
            identity: config.tol_identity,
            geometry: config.tol_geometry,
        },
        rng: sample::RNG_NAME.to_string(),
        suites,
        all_pass,
    })
}

/// Orbit family selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitTarget {
    F1,
    F5,
    L21,
    L41,
    L81,
    L85,
}

impl OrbitTarget {
    pub fn tag(&self) -> &'static str {
        match self {
            OrbitTarget::F1 => "f1",
            OrbitTarget::F5 => "f5",
            OrbitTarget::L21 => "l21",
            OrbitTarget::L41 => "l41",
            OrbitTarget::L81 => "l81",
            OrbitTarget::L85 => "l85",
        }
    }

    fn index(&self) -> u64 {
        match self {
            OrbitTarget::F1 => 0,
            OrbitTarget::F5 => 1,
            OrbitTarget::L21 => 2,
            OrbitTarget::L41 => 3,
            OrbitTarget::L81 => 4,
            OrbitTarget::L85 => 5,
        }
    }
}

impl std::str::FromStr for OrbitTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f1" => Ok(OrbitTarget::F1),
            "f5" => Ok(OrbitTarget::F5),
            "l21" => Ok(OrbitTarget::L21),
            "l41" => Ok(OrbitTarget::L41),
            "l81" => Ok(OrbitTarget::L81),
            "l85" => Ok(OrbitTarget::L85),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

// orbit dumps draw from a namespace disjoint from every suite
const ORBIT_STREAM: u64 = 100;

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes `count` seeded orbits of the chosen generator as CSV: one row per
/// orbit element, coordinates with 17 significant digits, LF line endings.
pub fn dump_orbits<W: Write>(
    seed: u64,
    target: OrbitTarget,
    count: usize,
    mut out: W,
) -> Result<()> {
    let mut rng = sample::stream(seed, ORBIT_STREAM, target.index());
    let tol = 1e-10;
    match target {
        OrbitTarget::F1 | OrbitTarget::F5 => {
            out.write_all(b"orbit_id,step,x1,x2,x3,y1,y2,y3\n")?;
            for orbit_id in 0..count {
                let p = sample::sample_pair::<f64, _>(&mut rng);
                let orbit = match target {
                    OrbitTarget::F1 => orbit_of(action_f1, &p, 4, tol)?,
                    _ => orbit_of(action_f5, &p, 4, tol)?,
                };
                for (step, entry) in orbit.entries().iter().enumerate() {
                    let u = entry.u.coords();
                    let v = entry.v.coords();
                    writeln!(
                        out,
                        "{orbit_id},{step},{},{},{},{},{},{}",
                        fmt17(u[0]),
                        fmt17(u[1]),
                        fmt17(u[2]),
                        fmt17(v[0]),
                        fmt17(v[1]),
                        fmt17(v[2]),
                    )?;
                }
            }
        }
        OrbitTarget::L21 | OrbitTarget::L41 | OrbitTarget::L81 | OrbitTarget::L85 => {
            let model = match target {
                OrbitTarget::L21 => LensModel::L21,
                OrbitTarget::L41 => LensModel::L41,
                OrbitTarget::L81 => LensModel::L81,
                _ => LensModel::L85,
            };
            out.write_all(b"orbit_id,step,a,b,c,d\n")?;
            for orbit_id in 0..count {
                let z = sample::sample_s3::<f64, _>(&mut rng);
                let orbit = orbit_of(|w| model.deck(w), &z, model.order(), tol)?;
                for (step, entry) in orbit.entries().iter().enumerate() {
                    let q = entry.as_quaternion();
                    writeln!(
                        out,
                        "{orbit_id},{step},{},{},{},{}",
                        fmt17(q.a),
                        fmt17(q.b),
                        fmt17(q.c),
                        fmt17(q.d),
                    )?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> RunConfig {
        RunConfig {
            seed: 7,
            samples: 200,
            ..RunConfig::default()
        }
    }

    #[test]
    fn full_run_passes_at_small_scale() {
        let report = run(&small_config()).unwrap();
        assert!(report.all_pass, "{}", report.to_text());
        assert_eq!(report.suites.len(), 9);
    }

    #[test]
    fn reports_are_deterministic_modulo_wall_time() {
        let a = run(&small_config()).unwrap();
        let b = run(&small_config()).unwrap();
        let strip = |mut r: RunReport| {
            for s in &mut r.suites {
                for c in &mut s.checks {
                    c.wall_ms = 0.0;
                }
            }
            r.to_json()
        };
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn perturbed_tolerance_fails() {
        let config = RunConfig {
            tol_identity: 1e-30,
            suites: vec![Suite::Algebra],
            ..small_config()
        };
        let report = run(&config).unwrap();
        assert!(!report.all_pass);
    }

    #[test]
    fn run_rejects_bad_config() {
        let config = RunConfig {
            samples: 0,
            ..RunConfig::default()
        };
        assert!(matches!(run(&config), Err(Error::OutOfRange { .. })));
        let config = RunConfig {
            tol_geometry: -1.0,
            ..RunConfig::default()
        };
        assert!(matches!(run(&config), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn suite_parsing() {
        use std::str::FromStr;
        assert_eq!(Suite::from_str("descent").unwrap(), Suite::Descent);
        assert!(matches!(
            Suite::from_str("bogus"),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn orbit_dump_row_counts() {
        let mut buf = Vec::new();
        dump_orbits(42, OrbitTarget::F1, 3, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "orbit_id,step,x1,x2,x3,y1,y2,y3");
        assert_eq!(lines.len(), 1 + 3 * 4);
        assert!(lines[1].starts_with("0,0,"));

        let mut buf = Vec::new();
        dump_orbits(42, OrbitTarget::L21, 1, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 2);
        assert!(text.lines().nth(1).unwrap().split(',').count() == 6);
    }

    #[test]
    fn orbit_dump_is_seed_stable() {
        let mut a = Vec::new();
        dump_orbits(9, OrbitTarget::L85, 2, &mut a).unwrap();
        let mut b = Vec::new();
        dump_orbits(9, OrbitTarget::L85, 2, &mut b).unwrap();
        assert_eq!(a, b);
        let mut c = Vec::new();
        dump_orbits(10, OrbitTarget::L85, 2, &mut c).unwrap();
        assert_ne!(a, c);
    }
}
