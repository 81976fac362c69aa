use std::time::Instant;

use comsal::corpus::{generate, CorpusParams};
use comsal::homology::betti;
use comsal::oracle::intersection_poset;
use comsal::salvetti::salvetti_complex;
use comsal::zcover::verify_nerve;

fn main() {
    let corpus = generate(&CorpusParams::default()).unwrap();
    let total = Instant::now();
    for (idx, a) in corpus.iter().enumerate() {
        let t = Instant::now();
        let (com, _) = a.enumerate_covectors().unwrap();
        let t_enum = t.elapsed();

        let t = Instant::now();
        let full = a.forget_region();
        let (com_v, _) = full.enumerate_covectors().unwrap();
        let complex = salvetti_complex(&com_v).unwrap();
        let counts = complex.face_counts();
        let profile = betti(&complex);
        let poset = intersection_poset(&full).unwrap();
        let poincare = poset.poincare_polynomial();
        let t_hom = t.elapsed();

        let t = Instant::now();
        let report = verify_nerve(a).unwrap();
        let t_nerve = t.elapsed();

        println!(
            "{idx}: d={} m={} |L|={} |L_V|={} faces={counts:?} betti={:?} os={poincare:?} z={} | enum {:?} hom {:?} nerve {:?}",
            a.dim(),
            a.ground_size(),
            com.len(),
            com_v.len(),
            profile.betti,
            report.z_count,
            t_enum,
            t_hom,
            t_nerve
        );
        assert!(report.ok(), "instance {idx}: {report}");
        assert_eq!(
            profile.betti_padded(poincare.len()),
            poincare.iter().map(|&c| c as usize).collect::<Vec<_>>(),
            "instance {idx} betti vs poincare"
        );
        assert!(!profile.has_torsion());
    }
    println!("total {:?}", total.elapsed());
}
