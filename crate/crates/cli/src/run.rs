use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use tdpair_core::appendix::{bundled_table, ModuleTable, MAX_D};

use crate::UsageError;

/// Runs `task(0..n)` on up to `jobs` threads and returns results in index
/// order, so output never depends on scheduling.
pub fn run_indexed<T, F>(jobs: usize, n: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.clamp(1, n.max(1));
    if jobs == 1 {
        return (0..n).map(&task).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let out = task(i);
                slots.lock().expect("worker panicked")[i] = Some(out);
            });
        }
    });
    slots.into_inner().expect("worker panicked").into_iter().map(|x| x.expect("every slot filled")).collect()
}

/// Degrees selected by `--d`, defaulting to every bundled degree.
pub fn degrees(d: Option<usize>) -> Result<Vec<usize>, UsageError> {
    match d {
        Some(d) if d > MAX_D => Err(UsageError(format!("--d {d}: tables exist only for d <= {MAX_D}"))),
        Some(d) => Ok(vec![d]),
        None => Ok((0..=MAX_D).collect()),
    }
}

/// Tables for the given degrees, from `assets` when set.
pub fn load_tables(assets: Option<&Path>, ds: &[usize]) -> Result<Vec<ModuleTable>, UsageError> {
    ds.iter()
        .map(|&d| {
            let t = match assets {
                Some(dir) => {
                    let path = dir.join(format!("d{d}.table"));
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    ModuleTable::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?
                }
                None => bundled_table(d).map_err(|e| UsageError(format!("bundled table d={d}: {e}")))?,
            };
            if t.d != d {
                return Err(UsageError(format!("table for d={d} declares d {}", t.d)));
            }
            Ok(t)
        })
        .collect()
}

/// `v1+fnv1a:...` for one table, `d0=...,d1=...` for several.
pub fn asset_version(tables: &[ModuleTable]) -> Option<String> {
    match tables {
        [] => None,
        [t] => Some(t.asset_version()),
        ts => Some(ts.iter().map(|t| format!("d{}={}", t.d, t.asset_version())).collect::<Vec<_>>().join(",")),
    }
}

/// Stream index for trial `t` at degree `d`: each degree gets its own
/// block of streams so that `--d 3` reproduces the `d = 3` part of a full run.
pub fn stream(d: usize, trial: usize) -> u64 {
    ((d as u64) << 32) | trial as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_independent_of_jobs() {
        let a = run_indexed(1, 50, |i| i * i);
        let b = run_indexed(7, 50, |i| i * i);
        assert_eq!(a, b);
        assert!(run_indexed(4, 0, |i| i).is_empty());
    }
}
