"""DensityReport: everything the tool knows about one twist vector, plus
the JSON/CSV formatting conventions shared by the CLI."""

from dataclasses import dataclass
import json
import math

from .conjectures import ConjectureVerdict, Status, check_stoimenow, check_voldet_conjecture
from .determinant import DeterminantRecord, det_density
from .rational import RationalLinkInfo, TwistVector, classify
from .volume import VolumeWindow, volume_window

__all__ = ["DensityReport", "build_report", "fmt_float", "round_floats", "dumps"]

SIG_DIGITS = 12


def fmt_float(x):
    """12 significant digits; ``format`` rounds half-to-even on the exact
    binary value, so the text is reproducible."""
    if math.isinf(x) or math.isnan(x):
        return str(x)
    return format(x, f".{SIG_DIGITS}g")


def round_floats(obj):
    if isinstance(obj, float):
        return float(fmt_float(obj))
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj


def dumps(obj):
    """Canonical JSON text used for every CLI document."""
    return json.dumps(round_floats(obj), indent=2, sort_keys=False, ensure_ascii=True) + "\n"


@dataclass(frozen=True)
class DensityReport:
    input: TwistVector
    link: RationalLinkInfo
    determinant: DeterminantRecord
    volume: VolumeWindow
    conjectures: tuple

    def to_dict(self):
        info = self.link
        vol = self.volume
        return {
            "input": str(self.input),
            "link": {
                "source": str(info.source),
                "fraction_p": str(info.fraction_p),
                "fraction_q": str(info.fraction_q),
                "crossings": info.crossings,
                "components": info.components,
                "hyperbolic_certified": info.hyperbolic_certified,
            },
            "determinant": {
                "det": str(self.determinant.det),
                "crossings": self.determinant.crossings,
                "density": self.determinant.density,
            },
            "volume": {
                "lower": vol.lower,
                "upper": vol.upper,
                "density_lower": vol.density_lower,
                "density_upper": vol.density_upper,
                "certified": vol.certified,
                "degenerate": vol.degenerate,
                "rough_bounds": None if vol.rough_bounds is None else list(vol.rough_bounds),
            },
            "conjectures": [
                {"name": c.name, "status": c.status.value, "lhs": c.lhs,
                 "rhs": c.rhs, "detail": c.detail}
                for c in self.conjectures
            ],
        }

    @classmethod
    def from_dict(cls, data):
        link = data["link"]
        det = data["determinant"]
        vol = data["volume"]
        rough = vol["rough_bounds"]
        return cls(
            input=TwistVector.parse(data["input"]),
            link=RationalLinkInfo(
                source=TwistVector.parse(link["source"]),
                fraction_p=int(link["fraction_p"]),
                fraction_q=int(link["fraction_q"]),
                crossings=link["crossings"],
                components=link["components"],
                hyperbolic_certified=link["hyperbolic_certified"],
            ),
            determinant=DeterminantRecord(int(det["det"]), det["crossings"], det["density"]),
            volume=VolumeWindow(
                lower=vol["lower"],
                upper=vol["upper"],
                density_lower=vol["density_lower"],
                density_upper=vol["density_upper"],
                certified=vol["certified"],
                degenerate=vol["degenerate"],
                rough_bounds=None if rough is None else tuple(rough),
            ),
            conjectures=tuple(
                ConjectureVerdict(c["name"], Status(c["status"]), c["lhs"], c["rhs"], c["detail"])
                for c in data["conjectures"]
            ),
        )


def build_report(tv):
    """Classification, determinant and volume bounds for the diagram ``tv``."""
    rec = det_density(tv)
    window = volume_window(tv)
    return DensityReport(
        input=tv,
        link=classify(tv),
        determinant=rec,
        volume=window,
        conjectures=(
            check_voldet_conjecture(window, rec.det),
            check_stoimenow(window, rec.det),
        ),
    )
