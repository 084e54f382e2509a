from dpcolor.discharging.audit import audit_claims, face_case, reducible_witnesses, vertex_case
from dpcolor.discharging.classify import Classification, FaceClass, FiveType, SourceSink, classify_faces
from dpcolor.discharging.lemmas import check_structural_lemmas
from dpcolor.discharging.rules import ChargeLedger, Transfer, discharge

__all__ = [
    "ChargeLedger",
    "Classification",
    "FaceClass",
    "FiveType",
    "SourceSink",
    "Transfer",
    "audit_claims",
    "check_structural_lemmas",
    "classify_faces",
    "discharge",
    "face_case",
    "reducible_witnesses",
    "vertex_case",
]
