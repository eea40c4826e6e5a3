//! Runs every example's `run` so the examples directory cannot rot.

use std::io::Write;

#[allow(dead_code)]
#[path = "../examples/train_forest.rs"]
mod train_forest;
#[allow(dead_code)]
#[path = "../examples/classify.rs"]
mod classify;
#[allow(dead_code)]
#[path = "../examples/secondary_clusters.rs"]
mod secondary_clusters;
#[allow(dead_code)]
#[path = "../examples/recursive_recluster.rs"]
mod recursive_recluster;
#[allow(dead_code)]
#[path = "../examples/variance_report.rs"]
mod variance_report;
#[allow(dead_code)]
#[path = "../examples/information_gain.rs"]
mod information_gain;
#[allow(dead_code)]
#[path = "../examples/iris_bench.rs"]
mod iris_bench;
#[allow(dead_code)]
#[path = "../examples/listing.rs"]
mod listing;
#[allow(dead_code)]
#[path = "../examples/forest_fires.rs"]
mod forest_fires;
#[allow(dead_code)]
#[path = "../examples/el_nino.rs"]
mod el_nino;

#[test]
fn train_forest_runs() {
    let forest = train_forest::run().unwrap();
    assert_eq!(forest.trees.len(), 3);
}

#[test]
fn classify_runs() {
    assert_eq!(classify::run().unwrap(), ["setosa", "versicolor", "virginica"]);
}

#[test]
fn secondary_clusters_runs() {
    let c = secondary_clusters::run().unwrap();
    assert!(c.is_partition_of(150));
}

#[test]
fn recursive_recluster_runs() {
    let c = recursive_recluster::run().unwrap();
    assert!(c.is_partition_of(150));
    assert!(c.generation >= 1);
}

#[test]
fn variance_report_runs() {
    let r = variance_report::run().unwrap();
    assert_eq!(r.len(), 4);
    assert!(r.iter().all(|x| x.groups_before == 3));
}

#[test]
fn information_gain_runs() {
    let (plain, weighted) = information_gain::run().unwrap();
    assert!(plain > 0.0 && weighted > 0.0);
}

#[test]
fn iris_bench_runs() {
    let s = iris_bench::run(42).unwrap();
    assert!(s.holdout.is_some());
}

#[test]
fn listing_runs() {
    let text = listing::run().unwrap();
    assert!(text.starts_with("Rows clustered for Species setosa\n"));
}

#[test]
fn forest_fires_runs_on_a_synthetic_file() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("fires.csv");
    let mut f = std::fs::File::create(&data).unwrap();
    writeln!(f, "X,Y,month,day,FFMC,DMC,DC,ISI,temp,RH,wind,rain,area").unwrap();
    let months = ["mar", "aug", "sep"];
    for i in 0..60u32 {
        let (x, y) = (1 + i % 3, 2 + i % 2);
        let m = months[(i % 3) as usize];
        let hot = (i % 3) as f64 * 10.0;
        writeln!(f, "{x},{y},{m},fri,{},{},{},5,{},40,3,0,0", 85.0 + hot / 5.0, 20.0 + hot, 100.0 + hot * 20.0, 10.0 + hot)
            .unwrap();
    }
    drop(f);
    let r = forest_fires::run(&data, &dir.path().join("out")).unwrap();
    assert_eq!(r.column_name, "month");
    assert!(r.variance_before.is_finite() && r.variance_after.is_finite());
}

#[test]
fn el_nino_runs_on_a_synthetic_file() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("elnino");
    let mut f = std::fs::File::create(&data).unwrap();
    for buoy in 1..=3 {
        for day in 1..=6 {
            let b = buoy as f64;
            writeln!(
                f,
                "{buoy} {day} 0.0 -140.0 {} {} {} {} {}",
                -b - day as f64 * 0.1,
                b * 0.5,
                80.0 + b,
                26.0 + b * 0.3,
                27.0 + b * 0.2
            )
            .unwrap();
        }
    }
    drop(f);
    let r = el_nino::run(&data, &dir.path().join("out")).unwrap();
    assert_eq!(r.len(), 5);
}
