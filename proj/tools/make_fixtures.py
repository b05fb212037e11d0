"""Regenerates the synthetic fixture panel and survey under data/.

The panel follows linear production functions in TeraFLOPS and salaries
($M) with Gaussian noise; none of it is real institutional data.
"""
import csv
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"

# institution: (first year, last year, base TF, TF growth, base salaries $M, salary growth)
INSTITUTIONS = {
    "Inst A": (2009, 2022, 40.0, 0.38, 0.9, 0.06),
    "Inst B": (2011, 2022, 120.0, 0.33, 1.4, 0.05),
    "Inst C": (2005, 2022, 25.0, 0.40, 0.6, 0.07),
    "Inst D": (2015, 2022, 400.0, 0.30, 1.8, 0.04),
    "Inst E": (2008, 2022, 60.0, 0.42, 1.1, 0.06),
}

# output: (intercept, per TF, per $M salaries, noise sd)
MODELS = {
    "publications": (1900.0, 0.20, 1370.0, 450.0),
    "doctorates": (300.0, 0.012, 78.0, 40.0),
    "herd_musd": (155.0, 0.030, 145.0, 45.0),
    "hi_impact_pubs": (250.0, 0.036, 212.0, 70.0),
}


def main() -> None:
    rng = np.random.default_rng(2025)
    rows = []
    for name, (y0, y1, tf0, g_tf, sal0, g_sal) in INSTITUTIONS.items():
        for i, year in enumerate(range(y0, y1 + 1)):
            tf = tf0 * (1 + g_tf) ** i * rng.uniform(0.85, 1.15)
            sal = sal0 * (1 + g_sal) ** i * rng.uniform(0.9, 1.1)
            row = {"institution": name, "year": year, "teraflops": round(tf, 1),
                   "salaries_musd": round(sal, 3)}
            for out, (b0, b_tf, b_sal, sd) in MODELS.items():
                value = b0 + b_tf * tf + b_sal * sal + rng.normal(0.0, sd)
                row[out] = round(value, 1) if out == "herd_musd" else int(round(value))
            rows.append(row)
    # One gap in an output so listwise deletion is exercised.
    rows[5]["hi_impact_pubs"] = ""

    OUT.mkdir(exist_ok=True)
    header = ["institution", "year", "teraflops", "salaries_musd", "herd_musd", "doctorates",
              "publications", "hi_impact_pubs"]
    with open(OUT / "fixture_panel.csv", "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)

    survey_header = ["institution", "year", "teraflops", "salaries_musd", "fte_count", "herd_musd",
                     "doctorates", "publications"]
    survey = []
    for i in range(12):
        herd = float(rng.uniform(180, 2000))
        phd = int(herd * rng.uniform(0.3, 0.7))
        pubs = int(herd * rng.uniform(6, 11))
        tf = herd * 11.47 * rng.uniform(0.5, 1.5)
        sal = herd * 0.00294 * rng.uniform(0.6, 1.4)
        rec = {"institution": f"R1-{i + 1:02d}", "year": 2025, "teraflops": round(tf, 1),
               "salaries_musd": round(sal, 3), "fte_count": "", "herd_musd": round(herd, 1),
               "doctorates": phd, "publications": pubs}
        survey.append(rec)
    # One respondent reports FTEs instead of dollars, one reports hardware instead of TF.
    survey[3]["fte_count"] = 12
    survey[3]["salaries_musd"] = ""
    survey[7]["teraflops"] = ""
    with open(OUT / "fixture_survey.csv", "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=survey_header, lineterminator="\n")
        w.writeheader()
        w.writerows(survey)
    with open(OUT / "fixture_inventory.csv", "w", newline="") as f:
        f.write("institution,device_count,gf_per_device\n")
        f.write("R1-08,60000,40\n")
        f.write("R1-08,320,9700\n")


if __name__ == "__main__":
    main()
