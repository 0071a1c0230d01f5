//! Stability certificates and integer witnesses on small hand-built forms.

use cr_sphere::certify::{instability_certificate, Certificate};
use cr_sphere::forms::{Label, SymQForm};
use cr_sphere::rational::{int, to_text};

fn form(rows: &[[i64; 3]]) -> SymQForm {
    let basis = ['p', 'q', 'r'].into_iter().map(Label::Var).collect();
    let matrix = rows
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    SymQForm::new(basis, matrix).expect("symmetric")
}

fn main() -> cr_sphere::Result<()> {
    let cases = [
        (
            "positive definite",
            form(&[[2, 1, 0], [1, 2, 1], [0, 1, 2]]),
        ),
        ("semidefinite", form(&[[1, 1, 0], [1, 1, 0], [0, 0, 3]])),
        ("indefinite", form(&[[1, 2, 0], [2, 1, 0], [0, 0, 1]])),
        ("zero diagonal", form(&[[0, 1, 0], [1, 0, 0], [0, 0, 0]])),
    ];
    for (name, q) in cases {
        let cert = instability_certificate(&q)?;
        match &cert {
            Certificate::Stable(s) => println!(
                "{name}: stable, D = {:?}, kernel dim {}",
                s.diag.iter().map(to_text).collect::<Vec<_>>(),
                s.kernel.len()
            ),
            Certificate::Unstable(w) => println!(
                "{name}: witness {:?} gives {} ({:?})",
                w.vector.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                to_text(&w.value),
                w.source
            ),
        }
        assert!(cert.verify(&q));
    }
    Ok(())
}
