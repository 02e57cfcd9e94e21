#pragma once

#include <string>

#include "critnls/nonlinearity.hpp"
#include "critnls/profile.hpp"

namespace critnls {

// Angular-function registry. Names:
//   "gauge{mu}"    mu e^{i theta} (any d), e.g. "gauge1", "gauge0.5", "gauge-2"
//   "re-abs-re"    |Re u| Re u           (d = 2)
//   "cos3"         |Re u|^2 Re u         (d = 1)
//   "u-squared"    u^2                   (d = 2)
//   "re-im-mixed"  |Re u|Re u - i|Im u|Im u  (d = 2)
AngularFunction angular_preset(const std::string& name, int d);

// Final-data shapes on the frequency grid:
//   "gaussian": eps * exp(-|xi|^2 / (2 sigma^2))           (width = sigma)
//   "bump":     eps * plateau of radius `radius` with a C-infinity edge of
//               thickness `width`, compactly supported at radius + width
FinalData gaussian_final_data(const Grid& g, double eps, double sigma, double delta);
FinalData bump_final_data(const Grid& g, double eps, double radius, double width,
                          double delta);
FinalData final_data_preset(const Grid& g, const std::string& name, double eps,
                            double sigma, double radius, double width, double delta);

}  // namespace critnls
