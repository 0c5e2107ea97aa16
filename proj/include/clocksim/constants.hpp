#pragma once

// Physical constants and commonly used scales (SI units throughout).

namespace clocksim::constants {

inline constexpr double c = 299792458.0;          // speed of light, m/s
inline constexpr double c2 = c * c;

inline constexpr double gm_sun = 1.32712440018e20;   // m^3/s^2
inline constexpr double gm_earth = 3.986004418e14;   // m^3/s^2
inline constexpr double gm_jupiter = 1.26686534e17;  // m^3/s^2

inline constexpr double au = 1.495978707e11;       // astronomical unit, m
inline constexpr double r_sun = 6.957e8;           // solar photosphere radius, m
inline constexpr double r_earth = 6.378137e6;      // equatorial radius, m
inline constexpr double r_jupiter = 7.1492e7;      // equatorial radius, m

inline constexpr double earth_rotation_rate = 7.2921150e-5;  // rad/s
inline constexpr double year = 3.15576e7;          // Julian year, s
inline constexpr double day = 86400.0;             // s

inline constexpr double gm_earth_mass_unit = 3.986004418e14;  // GM of one Earth mass

// Solar-system barycenter velocity relative to the CMB rest frame.
inline constexpr double v_sun_cmb = 3.5e5;         // m/s

}  // namespace clocksim::constants
