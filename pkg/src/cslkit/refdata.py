"""Bundled reference data: the published Bravais-class table for all CSL
classes with Sigma <= 59 (three columns: primitive, body centered and face
centered cubic), transcribed verbatim.

Rows with two quaternions are pairs of mutually inverse equivalence classes
that the reference prints on a single line.  Note that the verification suite
compares this transcription against the exact computation; see the 'table'
suite for the outcome.
"""
from __future__ import annotations

REFERENCE_TABLE_59: tuple[tuple[int, tuple[str, ...], tuple[str, str, str]], ...] = (
    (3, ("(0,1,1,1)",), ("hP", "hP", "hP")),
    (5, ("(2,1,0,0)",), ("tP", "tI", "tI")),
    (7, ("(2,1,1,1)",), ("hR", "hR", "hR")),
    (9, ("(1,2,2,0)",), ("oC", "oF", "oI")),
    (11, ("(3,1,1,0)",), ("oC", "oC", "oC")),
    (13, ("(1,2,2,2)",), ("hR", "hR", "hR")),
    (13, ("(3,2,0,0)",), ("tP", "tI", "tI")),
    (15, ("(0,5,2,1)",), ("oC", "oF", "oI")),
    (17, ("(4,1,0,0)",), ("tP", "tI", "tI")),
    (17, ("(3,2,2,0)",), ("oC", "oF", "oI")),
    (19, ("(4,1,1,1)",), ("hR", "hR", "hR")),
    (19, ("(1,3,3,0)",), ("oC", "oC", "oC")),
    (21, ("(3,2,2,2)",), ("hP", "hP", "hP")),
    (21, ("(0,4,2,1)",), ("oC", "oF", "oI")),
    (23, ("(0,6,3,1)",), ("mC", "mC", "mC")),
    (25, ("(4,3,0,0)",), ("tP", "tI", "tI")),
    (25, ("(0,5,4,3)",), ("mC", "mC", "mC")),
    (27, ("(5,1,1,0)",), ("oC", "oC", "oC")),
    (27, ("(0,7,2,1)",), ("mC", "mC", "mC")),
    (29, ("(5,2,0,0)",), ("tP", "tI", "tI")),
    (29, ("(0,4,3,2)",), ("mP", "mC", "mC")),
    (31, ("(2,3,3,3)",), ("hR", "hR", "hR")),
    (31, ("(0,7,3,2)",), ("mC", "mC", "mC")),
    (33, ("(5,2,2,0)",), ("oC", "oF", "oI")),
    (33, ("(1,4,4,0)",), ("oC", "oF", "oI")),
    (33, ("(0,7,4,1)",), ("oC", "oC", "oC")),
    (35, ("(0,5,3,1)",), ("oC", "oC", "oC")),
    (35, ("(0,6,5,3)",), ("oC", "oF", "oI")),
    (37, ("(6,1,0,0)",), ("tP", "tI", "tI")),
    (37, ("(5,2,2,2)",), ("hR", "hR", "hR")),
    (37, ("(0,8,3,1)",), ("mC", "mC", "mC")),
    (39, ("(6,1,1,1)",), ("hP", "hP", "hP")),
    (39, ("(5,3,2,1)", "(-5,3,2,1)"), ("mC", "mC", "mC")),
    (41, ("(5,4,0,0)",), ("tP", "tI", "tI")),
    (41, ("(3,4,4,0)",), ("oC", "oF", "oI")),
    (41, ("(0,6,2,1)",), ("mP", "mC", "mC")),
    (43, ("(4,3,3,3)",), ("hR", "hR", "hR")),
    (43, ("(5,3,3,0)",), ("oC", "oC", "oC")),
    (43, ("(0,9,2,1)",), ("mC", "mC", "mC")),
    (45, ("(0,5,4,2)",), ("oP", "oI", "oF")),
    (45, ("(0,8,5,1)",), ("oC", "oC", "oC")),
    (45, ("(0,7,5,4)",), ("oC", "oC", "oC")),
    (47, ("(0,9,3,2)",), ("mC", "mC", "mC")),
    (47, ("(0,7,6,3)",), ("mC", "mC", "mC")),
    (49, ("(1,4,4,4)",), ("hR", "hR", "hR")),
    (49, ("(0,6,3,2)",), ("mP", "mC", "mC")),
    (49, ("(0,9,4,1)",), ("mC", "mC", "mC")),
    (51, ("(7,1,1,0)",), ("oC", "oC", "oC")),
    (51, ("(1,5,5,0)",), ("oC", "oC", "oC")),
    (51, ("(5,4,3,1)", "(-5,4,3,1)"), ("mP", "mC", "mC")),
    (53, ("(7,2,0,0)",), ("tP", "tI", "tI")),
    (53, ("(0,6,4,1)",), ("mP", "mC", "mC")),
    (53, ("(0,9,4,3)",), ("mC", "mC", "mC")),
    (55, ("(0,10,3,1)",), ("oC", "oC", "oC")),
    (55, ("(0,9,5,2)",), ("mC", "mC", "mC")),
    (55, ("(0,7,6,5)",), ("mC", "mC", "mC")),
    (57, ("(3,4,4,4)",), ("hP", "hP", "hP")),
    (57, ("(7,2,2,0)",), ("oC", "oF", "oI")),
    (57, ("(5,4,4,0)",), ("oC", "oF", "oI")),
    (57, ("(6,4,2,1)", "(-6,4,2,1)"), ("mC", "mC", "mC")),
    (59, ("(3,5,5,0)",), ("oC", "oC", "oC")),
    (59, ("(0,7,3,1)",), ("mP", "mP", "mP")),
    (59, ("(0,9,6,1)",), ("mC", "mC", "mC")),
)
