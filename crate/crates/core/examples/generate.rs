//! Seeded random pre-crossed modules, written in the input file format.

use peiffer::generate::{generate, GenConfig, VarietyChoice};
use peiffer::io::to_json;

fn main() {
    let cfg = GenConfig {
        seed: 3,
        count: 12,
        variety: VarietyChoice::Mixed,
        ..GenConfig::default()
    };
    let gen = generate(&cfg);
    println!("{} instances in {} attempts", gen.instances.len(), gen.attempts);
    for p in &gen.instances {
        println!("  {}", p.name());
    }
    if let Some(first) = gen.instances.first() {
        let text = to_json(&first.to_file());
        println!("{} bytes of JSON for {}", text.len(), first.name());
    }
}
