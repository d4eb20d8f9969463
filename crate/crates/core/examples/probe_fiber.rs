use multspec::ffverify::CubicFamily;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let fam = CubicFamily::new(101, 3, 2, 4).unwrap();
    let cert = fam.injectivity_report(-5, 8, 42).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    println!("eliminant degree: {} (drop {})", cert.eliminant_degree, cert.degree_drop_at_infinity);
    println!("extension degree: {}", cert.extension_degree);
    println!("support: {} (infinity {})", cert.support_points, cert.support_points_at_infinity);
    println!("genuine: {}", cert.genuine_points);
    println!("orbit pairing: {}", cert.orbit_pairing_verified);
    println!("parameters: {}", cert.parameters.len());
    for p in &cert.parameters {
        println!("  a = {:?} (minpoly {}): mults {:?}",
            p.prime_field_value, p.minimal_polynomial,
            p.multipliers.iter().map(|m| (m.prime_field_value, m.minimal_polynomial.clone())).collect::<Vec<_>>());
    }
    println!("pairwise distinct: {}", cert.pairwise_distinct);
    println!("verdict: {}", cert.verdict);
}
