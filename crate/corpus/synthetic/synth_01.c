int g0, g1, g2, g3, g4, g5;
int arr[8] = {1, -8, -5, 2, -2, -5, -4, 8};
int i0, i1;

int helper(int a, int b)
{
  return a * 2 - b;
}

void bump(int k)
{
  g0 = g0 + k % 5;
}

int main(void)
{
  g0 = 0;
  g1 = 0;
  g2 = -4;
  g3 = -5;
  g4 = 4;
  g5 = -5;
  switch (g3 % 3) {
  case 0: g2 = arr[0] | g4; break;
  case 1: bump(-3);
  default: g1 = g1;
  }
  for (i0 = 0; i0 < 3; i0++) g4 = g1 ^ arr[1];
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g4) continue;
    arr[i0] = g1 % 7;
  }
  g5 = helper(g5, g4);
  switch (g3 % 3) {
  case 0: g3 = -5 != arr[2]; break;
  case 1: g1 = g1 + g2;
  default: bump(g0 % 7);
  }
  for (i0 = 0; i0 < 4; i0++) {
    g5 = g2 % 7;
    g4 = 0;
    g0 = g3 % 7;
  }
  arr[7] = helper(g5, g2);
  for (i0 = 0; i0 < 5; i0++) bump(-3 - arr[6]);
  g0 = g0 != g1;
  g2 = g5 & g4;
  switch (g4 % 3) {
  case 0: g1 = g3 == 3; break;
  case 1: g3 = g0 % 7;
  default: bump(helper(g2, arr[3]));
  }
  bump(-2 + arr[4]);
  switch (g3 % 3) {
  case 0: arr[5] = g4 < -5; break;
  case 1: g0 = g0;
  default: g2 = arr[4];
  }
  switch (g5 % 3) {
  case 0: g1 = g2 | g0; break;
  case 1: g5 = arr[0];
  default: g1 = g0 + arr[4];
  }
  if (g1 >= g1) g4 = g5 + g4;
  else g4 = helper(g5, arr[7]);
  if (arr[2] < g2) arr[3] = g2;
  else arr[4] = helper(g0, g2);
  for (i0 = 0; i0 < 1; i0++) {
    g3++;
    if (g5 % 7) g1 = 9 < 8;
    else arr[2] = helper(arr[4], -8);
  }
  switch (g1 % 3) {
  case 0: g1 = g1 * -7; break;
  case 1: bump(2 != arr[5]);
  default: bump(g3 ^ g2);
  }
  if (helper(arr[7], arr[5])) bump(9 == g0);
  else arr[3] = g2 & g4;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g5) continue;
    bump(g1 < g4);
  }
  if (g5) arr[1] = g0 * -8;
  else g2 = -3 < 8;
  switch (g4 % 3) {
  case 0: g2++; break;
  case 1: g5++;
  default: arr[3] = g2 % 7;
  }
  switch (g0 % 3) {
  case 0: g3 = g1 * g4; break;
  case 1: arr[6] = 5 < arr[2];
  default: g5 = g0 ^ g0;
  }
  g2 = 3 >= g1;
  for (i0 = 0; i0 < 3; i0++) g1 = helper(arr[1], 8);
  for (i0 = 0; i0 < 5; i0++) {
    switch (g4 % 3) {
    case 0: g3++; break;
    case 1: bump(g4);
    default: g0++;
    }
    g5++;
    g4 = helper(g0, g5);
  }
  i0 = 0;
  while (i0 < 2) {
    if (8 == g2) bump(g0 == arr[1]);
    else bump(g1);
    if (g2 > 40) break;
    i0++;
  }
  g4 = arr[6] - arr[0];
  switch (g0 % 3) {
  case 0: g5 = arr[0] % 7; break;
  case 1: g0++;
  default: g2 = 0;
  }
  switch (g4 % 3) {
  case 0: g3 = arr[6]; break;
  case 1: bump(arr[3]);
  default: g3 = g4 % 7;
  }
  bump(3 >= 5);
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g3) break;
    g3++;
  }
  g1 = g3;
  switch (g5 % 3) {
  case 0: g0 = g1 == g0; break;
  case 1: bump(g4);
  default: g3 = helper(g4, -2);
  }
  for (i0 = 0; i0 < 1; i0++) {
    g2 = helper(g5, g5);
    g2 = i0 + arr[6];
  }
  for (i0 = 0; i0 < 1; i0++) {
    g3++;
    g1 = g3 != 6;
    g2 = g3 % 7;
  }
  for (i0 = 0; i0 < 1; i0++) {
    bump(i0 % 7);
    switch (g2 % 3) {
    case 0: g2 = helper(arr[1], -7); break;
    case 1: g1 = g1 - 7;
    default: g0 = g1 < g4;
    }
    g0 = g5 % 7;
  }
  g1 = 0 != arr[5];
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g1) continue;
    g4 = arr[3] % 7;
  }
  switch (g3 % 3) {
  case 0: bump(helper(arr[7], 6)); break;
  case 1: g3 = 1;
  default: g3 = g2 ^ 6;
  }
  g2++;
  arr[4] = arr[1] | g4;
  for (i0 = 0; i0 < 3; i0++) {
    g4 = g1 < g0;
    bump(g2 ^ i0);
  }
  switch (g2 % 3) {
  case 0: g5 = helper(arr[3], g4); break;
  case 1: g3 = helper(4, -1);
  default: bump(g2 % 7);
  }
  if (helper(g4, g5)) arr[0] = g2 == 8;
  else bump(g2 == arr[1]);
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g5) break;
    g5 = i0 != arr[6];
    arr[i0] = g1 | i0;
  }
  g3 = arr[1] % 7;
  i0 = 0;
  while (i0 < 3) {
    switch (g1 % 3) {
    case 0: g0 = helper(g3, g1); break;
    case 1: g2 = g1 & g1;
    default: g3 = g0 == arr[0];
    }
    i0++;
  }
  g3 = g1 % 7;
  g0 = g0 * arr[3];
  g3 = helper(g4, arr[4]);
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g1) break;
    arr[i0] = g5 + -1;
    g0++;
  }
  if (helper(-8, g5)) arr[7] = arr[5] & -7;
  else g1 = g3 >= arr[1];
  switch (g1 % 3) {
  case 0: g0 = g4 % 7; break;
  case 1: bump(-4 * g0);
  default: g5++;
  }
  for (i0 = 0; i0 < 6; i0++) {
    g2++;
    if (g2 ^ 2) g3 = g4 - arr[2];
    else g2++;
    g2 = i0 % 7;
  }
  for (i0 = 0; i0 < 1; i0++) g2 = helper(arr[5], arr[4]);
  arr[3] = 1 - 8;
  if (g5 - g1) g0++;
  else arr[1] = 7 != g4;
  g4++;
  g1++;
  switch (g3 % 3) {
  case 0: bump(g0 ^ g4); break;
  case 1: g1 = g0 < 2;
  default: g0 = g3 != arr[0];
  }
  switch (g4 % 3) {
  case 0: g3++; break;
  case 1: g1 = -3 != arr[4];
  default: g5 = -6 != g2;
  }
  switch (g2 % 3) {
  case 0: g0 = helper(-7, 6); break;
  case 1: g3 = g1 ^ g5;
  default: bump(helper(g1, arr[5]));
  }
  switch (g3 % 3) {
  case 0: g1 = 5 % 7; break;
  case 1: g5 = -9;
  default: bump(g5 % 7);
  }
  i0 = 0;
  while (i0 < 2) {
    g0++;
    i0++;
  }
  for (i0 = 0; i0 < 7; i0++) g4 = g4;
  g4 = g2 ^ g1;
  switch (g0 % 3) {
  case 0: g4 = helper(g5, g2); break;
  case 1: g2 = g3 & g1;
  default: arr[4] = g1 < g4;
  }
  if (arr[5]) g2 = helper(g5, g3);
  else g2 = g1 - -2;
  if (g3 % 7) g1++;
  else bump(arr[2] * g5);
  g5 = g2 & g1;
  g0 = 7;
  g2 = 9 >= 9;
  for (i0 = 0; i0 < 7; i0++) {
    g2++;
    g1 = helper(0, i0);
  }
  g3 = arr[1] | 2;
  switch (g5 % 3) {
  case 0: bump(g0 + g5); break;
  case 1: g2 = arr[1];
  default: g5++;
  }
  for (i0 = 0; i0 < 3; i0++) {
    g3 = helper(-2, g0);
    g0 = g0 | 6;
    g1 = g2;
  }
  switch (g0 % 3) {
  case 0: arr[5] = helper(3, arr[0]); break;
  case 1: g0 = -1 % 7;
  default: g2 = g0 < 6;
  }
  g0++;
  g3 = g4 ^ arr[1];
  for (i0 = 0; i0 < 7; i0++) {
    g1 = helper(i0, -9);
    g2 = helper(g4, g0);
    g5 = g4 + i0;
  }
  if (-2 * g4) arr[2] = g3 % 7;
  else g1 = g4 % 7;
  if (helper(arr[7], g5)) g0 = g1;
  else g3 = 8 * g1;
  if (8 - g2) g3 = g5 | g4;
  else bump(8 * g2);
  if (g1 % 7) arr[7] = helper(g0, g3);
  else g0++;
  arr[1] = g1 != arr[4];
  for (i0 = 0; i0 < 6; i0++) g1++;
  if (arr[7] & arr[0]) g3 = g4 % 7;
  else bump(g2 != arr[2]);
  for (i0 = 0; i0 < 6; i0++) arr[i0] = helper(arr[7], g5);
  if (arr[0] != g0) g5++;
  else g3++;
  switch (g3 % 3) {
  case 0: g2 = arr[3] % 7; break;
  case 1: g3 = g5;
  default: g0 = arr[6];
  }
  g0 = helper(-6, -9);
  switch (g4 % 3) {
  case 0: bump(5); break;
  case 1: bump(8);
  default: g2 = g0 - g0;
  }
  if (g0 % 7) g0 = arr[1] >= g0;
  else g2 = arr[5] | 5;
  for (i0 = 0; i0 < 1; i0++) g5++;
  switch (g0 % 3) {
  case 0: g2 = 7; break;
  case 1: g4 = helper(arr[7], 4);
  default: bump(g3 >= arr[4]);
  }
  for (i0 = 0; i0 < 4; i0++) g3 = arr[5] + g4;
  for (i0 = 0; i0 < 5; i0++) {
    switch (g0 % 3) {
    case 0: bump(g2 % 7); break;
    case 1: g3 = arr[7];
    default: bump(1 >= 6);
    }
    bump(g1);
    arr[i0] = g4 == arr[6];
  }
  switch (g0 % 3) {
  case 0: g2++; break;
  case 1: bump(g5 >= arr[4]);
  default: g4 = g3 < -3;
  }
  switch (g2 % 3) {
  case 0: arr[5] = g0 + g1; break;
  case 1: g2 = helper(arr[7], g4);
  default: g0 = helper(arr[0], arr[6]);
  }
  g1++;
  g4 = 8 % 7;
  for (i0 = 0; i0 < 7; i0++) g3 = g5 % 7;
  i0 = 0;
  while (i0 < 4) {
    for (i1 = 0; i1 < 1; i1++) {
      g4 = g5 == g4;
      g3 = arr[6] | g3;
      g1 = helper(i1, -8);
    }
    i0++;
  }
  switch (g4 % 3) {
  case 0: g2 = g2 % 7; break;
  case 1: g2 = g5 | g0;
  default: g2 = g5;
  }
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g0) continue;
    bump(i0 >= arr[5]);
    g4 = arr[4];
  }
  if (g1) g0 = arr[4] % 7;
  else g4 = g3 % 7;
  if (8) g1 = -8 >= g2;
  else g2 = g3 & 8;
  for (i0 = 0; i0 < 4; i0++) {
    g3 = g4 ^ g2;
    g5 = g1 >= g1;
    g3 = i0 + g3;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g1) continue;
    g4 = helper(arr[1], 7);
  }
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g0) break;
    g3 = helper(g2, -9);
    g5++;
  }
  switch (g4 % 3) {
  case 0: g1++; break;
  case 1: g1 = g0 | g3;
  default: g0 = 2 % 7;
  }
  switch (g1 % 3) {
  case 0: g3 = g3 == g2; break;
  case 1: g3 = g5 * arr[7];
  default: g0 = g2 % 7;
  }
  switch (g4 % 3) {
  case 0: g4++; break;
  case 1: g4 = helper(g0, g3);
  default: g3 = 4;
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (helper(g4, g3)) g4 = arr[5] % 7;
    else g4 = g3 >= 3;
    for (i1 = 0; i1 < 1; i1++) arr[i1] = i1 ^ i1;
  }
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g2) break;
    bump(g5 - i0);
    bump(g5);
  }
  arr[3] = g0 >= -2;
  if (g4 % 7) g2 = -7 % 7;
  else g0 = g2 % 7;
  g2++;
  if (g0 ^ arr[3]) g1 = helper(5, arr[7]);
  else g0 = helper(g4, arr[4]);
  if (g4 % 7) g5 = g5 % 7;
  else arr[7] = g1;
  arr[0] = g0 + -2;
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g0) continue;
    arr[i0] = i0 | g4;
    arr[i0] = helper(g1, g5);
  }
  g1 = g1 >= arr[0];
  for (i0 = 0; i0 < 5; i0++) g3 = i0 % 7;
  i0 = 0;
  while (i0 < 2) {
    g1++;
    i0++;
  }
  bump(7 & 7);
  bump(g2 * 8);
  switch (g4 % 3) {
  case 0: g5 = helper(g5, g5); break;
  case 1: arr[0] = g2 | 3;
  default: g0++;
  }
  if (9) arr[4] = g3 - g4;
  else bump(6 ^ arr[2]);
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g5) continue;
    bump(5 ^ g2);
    arr[i0] = i0 ^ g0;
  }
  i0 = 0;
  while (i0 < 3) {
    bump(g4 & 5);
    i0++;
  }
  switch (g1 % 3) {
  case 0: g4 = g2 - g3; break;
  case 1: g2 = g0 % 7;
  default: g4 = g1 ^ g5;
  }
  switch (g5 % 3) {
  case 0: g1++; break;
  case 1: g1 = helper(arr[5], g0);
  default: g5 = g5;
  }
  arr[2] = g5;
  for (i0 = 0; i0 < 3; i0++) {
    switch (g1 % 3) {
    case 0: g5 = g0 != g5; break;
    case 1: g0++;
    default: g1 = g2;
    }
    for (i1 = 0; i1 < 1; i1++) {
      g0 = 3 % 7;
      g3++;
      g2 = -5 - g5;
    }
    switch (g5 % 3) {
    case 0: g2 = g5 % 7; break;
    case 1: g5 = g4 ^ 5;
    default: bump(g1 ^ -6);
    }
  }
  for (i0 = 0; i0 < 5; i0++) bump(g4);
  g3++;
  switch (g4 % 3) {
  case 0: g0 = g3 ^ 1; break;
  case 1: arr[4] = g3 | arr[2];
  default: g3 = g5 * g5;
  }
  g2 = g1;
  g4++;
  switch (g5 % 3) {
  case 0: bump(arr[2] % 7); break;
  case 1: bump(-3 - g1);
  default: g0 = g2 == g5;
  }
  switch (g4 % 3) {
  case 0: g3++; break;
  case 1: arr[1] = -7;
  default: arr[7] = helper(g5, g1);
  }
  if (g2 ^ arr[6]) arr[5] = g5 ^ g4;
  else g1 = g5;
  return g0 % 100;
}
