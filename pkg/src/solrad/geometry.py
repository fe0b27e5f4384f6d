"""Solar geometry for visible-channel calibration and irradiance features.

Everything here is a pure function of latitude, longitude and time:
declination, equation of time, true solar time, hour and zenith angles,
Earth-Sun distance, astronomical day length, and extraterrestrial
irradiance (instantaneous and daily-integrated).

Angle formulas use the Spencer (1971) Fourier series for declination,
equation of time and the eccentricity correction; the series denominator
is 365 for all years (the leap-day effect is below 0.1 degrees).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone

from .errors import DomainError

SOLAR_CONSTANT_WM2 = 1367.0


def _day_angle(day_of_year: int) -> float:
    if not 1 <= day_of_year <= 366:
        raise DomainError(f"day_of_year must be in 1..366, got {day_of_year}")
    return 2.0 * math.pi * (day_of_year - 1) / 365.0


@dataclass(frozen=True)
class GeoTemporalPoint:
    """A latitude/longitude/instant anchor for one observation.

    The timestamp must be timezone-aware; it is normalized to UTC.
    ``utc_offset_hours`` is the station-local clock offset used to derive
    the local calendar date and clock hour.
    """

    latitude: float
    longitude: float
    timestamp: datetime
    utc_offset_hours: float = 0.0

    def __post_init__(self):
        if not -90.0 <= self.latitude <= 90.0:
            raise DomainError(f"latitude out of [-90, 90]: {self.latitude}")
        if not -180.0 <= self.longitude <= 180.0:
            raise DomainError(f"longitude out of [-180, 180]: {self.longitude}")
        if self.timestamp.tzinfo is None:
            raise DomainError("timestamp must be timezone-aware (UTC semantics)")
        object.__setattr__(
            self, "timestamp", self.timestamp.astimezone(timezone.utc)
        )

    @property
    def local_datetime(self) -> datetime:
        """Station-clock datetime (naive) at this instant."""
        local = self.timestamp + timedelta(hours=self.utc_offset_hours)
        return local.replace(tzinfo=None)

    @property
    def local_date(self) -> date:
        return self.local_datetime.date()

    @property
    def day_of_year(self) -> int:
        """Day of year on the station-local calendar."""
        return self.local_datetime.timetuple().tm_yday

    @property
    def local_clock_hours(self) -> float:
        """Local clock time as fractional hours in [0, 24)."""
        local = self.local_datetime
        return (
            local.hour
            + local.minute / 60.0
            + local.second / 3600.0
            + local.microsecond / 3.6e9
        )


@dataclass(frozen=True)
class SolarGeometry:
    """All astronomical quantities for one point-instant."""

    declination_deg: float
    equation_of_time_min: float
    true_solar_time_h: float
    hour_angle_deg: float
    zenith_angle_deg: float
    earth_sun_distance_au: float
    day_length_h: float
    extraterrestrial_wm2: float
    extraterrestrial_daily_whm2: float


def declination(day_of_year: int) -> float:
    """Solar declination in degrees for a day of year (Spencer series)."""
    g = _day_angle(day_of_year)
    decl_rad = (
        0.006918
        - 0.399912 * math.cos(g)
        + 0.070257 * math.sin(g)
        - 0.006758 * math.cos(2 * g)
        + 0.000907 * math.sin(2 * g)
        - 0.002697 * math.cos(3 * g)
        + 0.00148 * math.sin(3 * g)
    )
    return math.degrees(decl_rad)


def equation_of_time(day_of_year: int) -> float:
    """Equation of time in minutes (apparent minus mean solar time)."""
    g = _day_angle(day_of_year)
    return 229.18 * (
        0.000075
        + 0.001868 * math.cos(g)
        - 0.032077 * math.sin(g)
        - 0.014615 * math.cos(2 * g)
        - 0.040849 * math.sin(2 * g)
    )


def eccentricity_correction(day_of_year: int) -> float:
    """Eccentricity correction factor E0 = (r0/r)^2 (Spencer series)."""
    g = _day_angle(day_of_year)
    return (
        1.000110
        + 0.034221 * math.cos(g)
        + 0.001280 * math.sin(g)
        + 0.000719 * math.cos(2 * g)
        + 0.000077 * math.sin(2 * g)
    )


def earth_sun_distance(day_of_year: int) -> float:
    """Earth-Sun distance in AU, derived as E0^(-1/2).

    Keeps a single orbital source of truth: the r^2 term in the pixel
    reflectance formula is then exactly 1/E0.
    """
    return eccentricity_correction(day_of_year) ** -0.5


def true_solar_time(point: GeoTemporalPoint) -> float:
    """True (apparent) solar time in hours, wrapped into [0, 24).

    Composition: local clock time, plus 4 minutes per degree of longitude
    offset from the clock's standard meridian (15 * utc_offset), plus the
    equation of time.
    """
    meridian = 15.0 * point.utc_offset_hours
    longitude_correction_h = 4.0 * (point.longitude - meridian) / 60.0
    eot_h = equation_of_time(point.day_of_year) / 60.0
    return (point.local_clock_hours + longitude_correction_h + eot_h) % 24.0


def hour_angle(true_solar_time_h: float) -> float:
    """Hour angle in degrees: 15 degrees per hour from solar noon."""
    return 15.0 * (true_solar_time_h - 12.0)


def zenith_angle(latitude: float, declination_deg: float, hour_angle_deg: float) -> float:
    """Solar zenith angle in degrees from latitude, declination, hour angle."""
    phi = math.radians(latitude)
    delta = math.radians(declination_deg)
    omega = math.radians(hour_angle_deg)
    cos_zenith = math.sin(phi) * math.sin(delta) + math.cos(phi) * math.cos(
        delta
    ) * math.cos(omega)
    cos_zenith = min(1.0, max(-1.0, cos_zenith))
    return math.degrees(math.acos(cos_zenith))


def day_length(latitude: float, declination_deg: float) -> float:
    """Astronomical day length in hours.

    The sunset-angle argument is clamped to [-1, 1], so polar day and
    polar night return 24 and 0 rather than failing.
    """
    arg = -math.tan(math.radians(latitude)) * math.tan(math.radians(declination_deg))
    arg = min(1.0, max(-1.0, arg))
    return (2.0 / 15.0) * math.degrees(math.acos(arg))


def sunset_hour_angle(latitude: float, declination_deg: float) -> float:
    """Sunset hour angle in radians, clamped for polar cases."""
    arg = -math.tan(math.radians(latitude)) * math.tan(math.radians(declination_deg))
    arg = min(1.0, max(-1.0, arg))
    return math.acos(arg)


def extraterrestrial_daily(latitude: float, day_of_year: int) -> float:
    """Daily top-of-atmosphere irradiation on a horizontal plane, in Wh/m2.

    Standard daily integral; polar night yields 0, never an error.
    """
    e0 = eccentricity_correction(day_of_year)
    delta = math.radians(declination(day_of_year))
    phi = math.radians(latitude)
    ws = sunset_hour_angle(latitude, declination(day_of_year))
    h0 = (
        (24.0 / math.pi)
        * SOLAR_CONSTANT_WM2
        * e0
        * (math.cos(phi) * math.cos(delta) * math.sin(ws) + ws * math.sin(phi) * math.sin(delta))
    )
    return max(0.0, h0)


def extraterrestrial_hourly(point: GeoTemporalPoint) -> float:
    """Instantaneous top-of-atmosphere irradiance at the record instant, W/m2.

    Uses cos(zenith) at the timestamp itself (records are point
    observations); floored at 0 below the horizon.
    """
    geo = solar_geometry(point)
    return geo.extraterrestrial_wm2


def solar_geometry(point: GeoTemporalPoint) -> SolarGeometry:
    """Bundle of every astronomical quantity for one point-instant."""
    doy = point.day_of_year
    decl = declination(doy)
    eot = equation_of_time(doy)
    tst = true_solar_time(point)
    omega = hour_angle(tst)
    zenith = zenith_angle(point.latitude, decl, omega)
    e0 = eccentricity_correction(doy)
    if zenith >= 90.0:
        instantaneous = 0.0
    else:
        instantaneous = SOLAR_CONSTANT_WM2 * e0 * math.cos(math.radians(zenith))
    return SolarGeometry(
        declination_deg=decl,
        equation_of_time_min=eot,
        true_solar_time_h=tst,
        hour_angle_deg=omega,
        zenith_angle_deg=zenith,
        earth_sun_distance_au=e0 ** -0.5,
        day_length_h=day_length(point.latitude, decl),
        extraterrestrial_wm2=instantaneous,
        extraterrestrial_daily_whm2=extraterrestrial_daily(point.latitude, doy),
    )
