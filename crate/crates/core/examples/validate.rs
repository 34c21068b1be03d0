//! Structural checks run before any evaluation.
use seshadri::{validate, AVSpec, CurveCert};

fn main() {
    let cases = [
        AVSpec::new("ok", 3, 18),
        AVSpec::new("degree", 3, 20),
        AVSpec::new("low-curve", 2, 4).with_curve(CurveCert::new(1, 2)),
        AVSpec::new("generating", 3, 216).with_curve(CurveCert { generates_dim: Some(3), ..CurveCert::new(3, 2) }),
        AVSpec::new("elliptic", 2, 4).with_curve(CurveCert { generates_dim: Some(1), ..CurveCert::new(3, 2) }),
        AVSpec::new("nested", 3, 18).with_subvariety(AVSpec::new("S", 2, 3)),
    ];
    for spec in &cases {
        let d = validate(spec);
        if d.is_empty() {
            println!("{}: valid", spec.id);
        }
        for x in d {
            println!("{x}");
        }
    }
}
