#include <ap_int.h>

// Divide-by-N LED toggler.
void top_module(bool tick, bool& led) {
  static ap_uint<24> divider = 0;
  static bool state = false;
  if (tick) {
    divider = divider + 1;
    if (divider == 5000000) {
      divider = 0;
      state = !state;
    }
  }
  led = state;
}
