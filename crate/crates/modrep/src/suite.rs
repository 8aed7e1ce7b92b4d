//! Parallel execution of the scenario registry.

use std::path::{Path, PathBuf};
use std::time::Instant;

use modrep_core::sl2lab::{run, select, Kind, Scenario, ScenarioResult, Status, Tier};
use modrep_core::Mat;
use rayon::prelude::*;

use crate::specfile::{make_generators, Generators, SpecError};

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub tier: Option<Tier>,
    pub filters: Vec<String>,
    pub seed: u64,
    /// Worker count; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub fixtures: Option<PathBuf>,
}

/// Generator matrices from `{dir}/{name}.json`; `None` when the file is
/// absent.
pub fn load_fixture(dir: &Path, name: &str) -> Option<Result<Vec<Mat>, SpecError>> {
    let path = dir.join(format!("{name}.json"));
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => return Some(Err(SpecError::Io(e))),
    };
    let parsed = serde_json::from_str::<Generators>(&text).map_err(|e| SpecError::Invalid(format!("{}: {e}", path.display())));
    Some(parsed.and_then(|g| make_generators(&g).map(|(_, g)| g)))
}

fn run_one(s: &Scenario, cfg: &SuiteConfig) -> ScenarioResult {
    let start = Instant::now();
    let mut r = match (&s.kind, &cfg.fixtures) {
        (Kind::Sporadic(c), Some(dir)) => match load_fixture(dir, c.name) {
            None => run(s, cfg.seed, None),
            Some(Ok(gens)) => run(s, cfg.seed, Some(&gens)),
            Some(Err(e)) => ScenarioResult::errored(s.id.clone(), &e.to_string()),
        },
        _ => run(s, cfg.seed, None),
    };
    r.runtime_ms = Some(start.elapsed().as_millis() as u64);
    r
}

/// Run the selected scenarios. Results are in registry order whatever the
/// thread count.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<ScenarioResult>, rayon::ThreadPoolBuildError> {
    let scenarios = select(cfg.tier.unwrap_or(Tier::Acceptance), &cfg.filters);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build()?;
    Ok(pool.install(|| scenarios.par_iter().map(|s| run_one(s, cfg)).collect()))
}

/// All non-skipped scenarios passed.
pub fn all_passed(results: &[ScenarioResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

/// One line per scenario plus totals.
pub fn summary(results: &[ScenarioResult]) -> String {
    let mut out = String::new();
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for r in results {
        let tag = match r.status {
            Status::Pass => {
                pass += 1;
                "PASS"
            }
            Status::Fail => {
                fail += 1;
                "FAIL"
            }
            Status::Skipped => {
                skip += 1;
                "SKIP"
            }
        };
        let ms = r.runtime_ms.map(|t| format!("{t} ms")).unwrap_or_default();
        out.push_str(&format!("{tag} {:<28} {ms:>9}", r.id));
        if let Some(e) = &r.error {
            out.push_str(&format!("  ({e})"));
        }
        for c in r.checks.iter().filter(|c| !c.pass) {
            out.push_str(&format!("\n     {}: expected {} got {}", c.name, json(&c.expected), json(&c.computed)));
        }
        out.push('\n');
    }
    out.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
    out
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_default()
}
