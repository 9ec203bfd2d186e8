#include <ap_int.h>

// 4-way byte multiplexer.
void top_module(ap_uint<8> a, ap_uint<8> b, ap_uint<8> c, ap_uint<8> d,
                ap_uint<2> sel, ap_uint<8>& y) {
  switch (sel) {
    case 0:
      y = a;
      break;
    case 1:
      y = b;
      break;
    case 2:
      y = c;
      break;
    case 3:
      y = d;
      break;
  }
}
