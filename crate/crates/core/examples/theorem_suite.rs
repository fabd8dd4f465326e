//! Runs the theorem checks on the catalog and a few random instances and
//! prints a tally per check.

use std::collections::BTreeMap;

use peiffer::generate::GenConfig;
use peiffer::theorems::{run_suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig {
        generate: GenConfig { seed: 7, ..GenConfig::default() },
        random: 40,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&cfg);
    let mut per_check: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = per_check.entry(r.check).or_default();
        if r.passed() {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
        e.2 += r.checked;
    }
    for (check, (pass, fail, n)) in per_check {
        println!("{check:26} {pass:4} pass {fail:2} fail {n:7} configurations");
    }
}
