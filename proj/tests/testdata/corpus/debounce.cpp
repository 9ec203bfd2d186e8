#include <ap_int.h>

// Debounce a mechanical button over 8 stable samples.
void top_module(bool raw, bool& stable) {
  static ap_uint<4> run = 0;
  static bool held = false;
  if (raw == held) {
    run = 0;
  } else {
    run = run + 1;
    if (run >= 8) {
      held = raw;
      run = 0;
    }
  }
  stable = held;
}
