#include <ap_int.h>

// 4x4 integer matrix multiply, row-major operands.
void top_module(const ap_int<8> a[16], const ap_int<8> b[16],
                ap_int<20> c[16]) {
#pragma HLS ARRAY_PARTITION variable=a complete
  for (int i = 0; i < 4; i++) {
    for (int j = 0; j < 4; j++) {
#pragma HLS PIPELINE
      ap_int<20> acc = 0;
      for (int k = 0; k < 4; k++) {
        acc += a[i * 4 + k] * b[k * 4 + j];
      }
      c[i * 4 + j] = acc;
    }
  }
}
