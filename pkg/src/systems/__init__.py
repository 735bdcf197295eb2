"""범주 인스턴스 위의 아이디얼 시스템."""

from .cache import IdealCache
from .chains import (
    annihilates,
    boric_system,
    high_rank_witness,
    in_low_rank_locus,
    low_rank_points,
    symmetric_chain,
    symmetric_generator,
)
from .model import (
    GeneratorData,
    IdealAtObject,
    IdealSystem,
    InitialSystem,
    MembershipResult,
    OrbitSystem,
    PulledBackSystem,
    RuleSystem,
    orbit,
)
from .operations import (
    CriterionEntry,
    CriterionReport,
    EquivarianceReport,
    EquivarianceWitness,
    LevelCertificate,
    StabilizationReport,
    equivariance_check,
    grobner_criterion,
    init_system,
    orbit_generators,
    phi_map,
    phi_psi_round_trip,
    psi_map,
    stabilization_probe,
    system_member,
    transfer_system,
)
from .spec_file import GeneratorLine, SystemSpec, load_system_spec, parse_system_spec

__all__ = [
    "CriterionEntry",
    "CriterionReport",
    "EquivarianceReport",
    "EquivarianceWitness",
    "GeneratorData",
    "GeneratorLine",
    "IdealAtObject",
    "IdealCache",
    "IdealSystem",
    "InitialSystem",
    "LevelCertificate",
    "MembershipResult",
    "OrbitSystem",
    "PulledBackSystem",
    "RuleSystem",
    "StabilizationReport",
    "SystemSpec",
    "annihilates",
    "boric_system",
    "equivariance_check",
    "grobner_criterion",
    "high_rank_witness",
    "in_low_rank_locus",
    "init_system",
    "load_system_spec",
    "low_rank_points",
    "orbit",
    "orbit_generators",
    "parse_system_spec",
    "phi_map",
    "phi_psi_round_trip",
    "psi_map",
    "stabilization_probe",
    "symmetric_chain",
    "symmetric_generator",
    "system_member",
    "transfer_system",
]
