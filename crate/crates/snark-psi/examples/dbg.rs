use snark_psi::synthesis::*;
fn main() {
    let start = std::time::Instant::now();
    let mut target = PsiTarget::new(0, 0, 1, 1, Mode::FiveCc).unwrap();
    target.verify = true;
    let out = synthesize(&target).unwrap();
    println!("target 35: n={} predicted={} verified={:?} elapsed={:?}",
        out.graph.vertex_count(), out.trace.predicted_psi, out.verified_psi, start.elapsed());
    let report = validate_snark(&out.graph, 5, &Default::default()).unwrap();
    println!("snark={} cyclic={:?} elapsed_total={:?}", report.is_snark, report.cyclic, start.elapsed());
}
