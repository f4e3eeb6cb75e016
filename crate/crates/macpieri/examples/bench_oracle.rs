use macpieri::oracle::oracle_weight;
use macpieri::symfunc::Family;
use std::time::Instant;
fn main() {
    let fam = match std::env::args().nth(1).as_deref() { Some("jack") => Family::Jack, Some("hl") => Family::HallLittlewood, _ => Family::Macdonald };
    let top: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 1..=top {
        let s = Instant::now();
        let w = oracle_weight(fam, n);
        println!("{n}: {:?} parts={}", s.elapsed(), w.parts.len());
    }
}
