int g0, g1, g2, g3, g4, g5;
int arr[8] = {-4, 4, 0, 6, 7, -1, -4, -4};
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
  g0 = -5;
  g1 = 1;
  g2 = 1;
  g3 = -1;
  g4 = 4;
  g5 = 5;
  if (arr[0] % 7) g4 = g1 < g4;
  else arr[5] = helper(g5, g1);
  g5 = g4 % 7;
  for (i0 = 0; i0 < 4; i0++) g3++;
  for (i0 = 0; i0 < 1; i0++) g2 = g5 & g2;
  if (-5 % 7) g0 = g0 < g4;
  else g5 = 4;
  for (i0 = 0; i0 < 3; i0++) g4 = arr[5] >= 3;
  i0 = 0;
  while (i0 < 3) {
    for (i1 = 0; i1 < 5; i1++) g4 = arr[0] + g5;
    i0++;
  }
  switch (g5 % 3) {
  case 0: g2 = g4 != g4; break;
  case 1: g2 = g5;
  default: bump(-7 % 7);
  }
  if (-5 % 7) g3++;
  else g2 = -8;
  if (g2 - g3) bump(g0 & -8);
  else g1 = g5 == -7;
  g1++;
  g4 = helper(-3, g2);
  g4 = g4 < g1;
  g0 = g2 == g5;
  g5++;
  for (i0 = 0; i0 < 4; i0++) {
    g5 = i0 ^ arr[3];
    if (arr[2]) g4++;
    else g5 = g3 != g5;
    g2 = g3 + arr[7];
  }
  for (i0 = 0; i0 < 6; i0++) arr[i0] = g0 != -4;
  arr[1] = g5 == 5;
  for (i0 = 0; i0 < 6; i0++) {
    bump(g0 ^ g5);
    arr[i0] = g0;
    g5 = -7 % 7;
  }
  if (arr[4] % 7) g0 = -3 >= 7;
  else g3 = g5 + 4;
  if (helper(g1, 8)) arr[2] = g3;
  else g1 = g3 & g1;
  for (i0 = 0; i0 < 7; i0++) g5 = g1 >= g0;
  if (g2 < g1) g2 = g4 | arr[3];
  else bump(g4);
  switch (g5 % 3) {
  case 0: g3 = arr[2] - arr[6]; break;
  case 1: g3 = g3 % 7;
  default: bump(g4 < g4);
  }
  g3 = g1 & arr[0];
  i0 = 0;
  while (i0 < 1) {
    bump(i0 | arr[4]);
    i0++;
  }
  switch (g3 % 3) {
  case 0: g4 = arr[6] & g4; break;
  case 1: g3 = helper(g4, g4);
  default: bump(helper(g4, g0));
  }
  arr[7] = arr[7] ^ 8;
  if (g1 >= g4) bump(g2 % 7);
  else g4 = g2;
  for (i0 = 0; i0 < 3; i0++) g5 = g1 % 7;
  g4 = 8 != g2;
  for (i0 = 0; i0 < 4; i0++) g1++;
  if (helper(g1, arr[7])) g4++;
  else bump(8 | g2);
  g1 = -7 & g3;
  switch (g0 % 3) {
  case 0: g4 = g2; break;
  case 1: bump(g4 + 8);
  default: g2 = g4;
  }
  if (helper(g5, arr[6])) g2 = g0 == arr[3];
  else g2 = helper(arr[6], -2);
  for (i0 = 0; i0 < 4; i0++) {
    g3++;
    g0 = g4;
    for (i1 = 0; i1 < 4; i1++) {
      if (arr[i1] > g2) continue;
      bump(g4 & arr[5]);
    }
  }
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g4) break;
    g4 = g0 != g2;
    g4 = arr[4] != i0;
  }
  g4 = 9 < -9;
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g2) break;
    bump(arr[4] % 7);
  }
  g0 = g5 == g4;
  g2++;
  for (i0 = 0; i0 < 6; i0++) g3 = g4 == g0;
  switch (g4 % 3) {
  case 0: g3 = g4 % 7; break;
  case 1: g4 = g3 % 7;
  default: g4 = helper(g0, arr[6]);
  }
  switch (g2 % 3) {
  case 0: g3 = g0; break;
  case 1: bump(helper(-1, g0));
  default: g3++;
  }
  for (i0 = 0; i0 < 6; i0++) arr[i0] = g0 ^ arr[6];
  for (i0 = 0; i0 < 8; i0++) bump(i0 >= arr[7]);
  g5 = g2 & g2;
  switch (g0 % 3) {
  case 0: bump(g3 == g5); break;
  case 1: bump(g1 + g3);
  default: arr[2] = g4 % 7;
  }
  g3++;
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = i0 | i0;
    if (g3 > 40) break;
    i0++;
  }
  if (helper(g1, arr[5])) g5 = arr[7] * 9;
  else g2++;
  for (i0 = 0; i0 < 3; i0++) g4 = helper(i0, g4);
  if (g2) g3++;
  else g4 = g2 == arr[2];
  switch (g1 % 3) {
  case 0: g2 = helper(g1, g5); break;
  case 1: g4 = g3 | -2;
  default: g4 = g3 < 7;
  }
  for (i0 = 0; i0 < 3; i0++) g5++;
  switch (g1 % 3) {
  case 0: g3 = helper(g0, g3); break;
  case 1: g4 = g4 >= g1;
  default: bump(9 % 7);
  }
  bump(g4 & g3);
  g5++;
  g5 = g3 == g1;
  if (g2 | g0) bump(g1 % 7);
  else g5++;
  g1 = g5 & g1;
  g0 = -5 < g1;
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g2) break;
    g3++;
  }
  for (i0 = 0; i0 < 8; i0++) g1 = helper(-2, g0);
  switch (g3 % 3) {
  case 0: arr[3] = helper(0, g3); break;
  case 1: g4 = helper(g0, arr[3]);
  default: g2++;
  }
  g5 = arr[0] != g2;
  for (i0 = 0; i0 < 2; i0++) bump(arr[1] != arr[0]);
  for (i0 = 0; i0 < 2; i0++) g2 = -3;
  switch (g4 % 3) {
  case 0: arr[4] = g0 % 7; break;
  case 1: g2 = g0 % 7;
  default: g5 = g3 >= g3;
  }
  arr[7] = g2 < g3;
  arr[6] = arr[6] & arr[0];
  g2 = -2 != g3;
  if (g3 % 7) bump(g3 % 7);
  else g0 = -3 % 7;
  switch (g0 % 3) {
  case 0: g0 = 8 % 7; break;
  case 1: g4 = -4 == arr[5];
  default: g2 = -7 | arr[3];
  }
  for (i0 = 0; i0 < 7; i0++) {
    g1 = i0 & 3;
    g1 = arr[1] % 7;
    g5 = i0 | i0;
  }
  g4 = g4 % 7;
  g1 = -8;
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g5) continue;
    arr[i0] = arr[0] < g1;
    g4 = i0 % 7;
  }
  i0 = 0;
  while (i0 < 2) {
    arr[i0] = arr[5] | arr[2];
    i0++;
  }
  for (i0 = 0; i0 < 3; i0++) {
    g5++;
    g4 = i0 == i0;
    g3 = i0 % 7;
  }
  for (i0 = 0; i0 < 2; i0++) bump(i0 < arr[6]);
  bump(helper(g1, g5));
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g5) continue;
    bump(0 % 7);
  }
  g3 = 8 & g5;
  if (arr[0] | -5) g4 = arr[2] - -9;
  else g4 = g3 % 7;
  if (-5 % 7) g2++;
  else g1 = g0 | -8;
  if (helper(g0, arr[5])) bump(helper(g1, g0));
  else arr[4] = helper(arr[2], g4);
  for (i0 = 0; i0 < 4; i0++) bump(arr[7] & arr[1]);
  bump(g4 < g1);
  switch (g2 % 3) {
  case 0: g3 = 0 + g2; break;
  case 1: g5++;
  default: g0 = g3;
  }
  switch (g3 % 3) {
  case 0: g2++; break;
  case 1: g1 = g4 == arr[6];
  default: arr[2] = helper(0, g5);
  }
  i0 = 0;
  while (i0 < 4) {
    switch (g1 % 3) {
    case 0: g2 = 7; break;
    case 1: arr[4] = 4;
    default: g4 = g4 | arr[0];
    }
    i0++;
  }
  if (-1 + g3) g0 = g2 % 7;
  else g0 = arr[6] != arr[5];
  for (i0 = 0; i0 < 3; i0++) arr[i0] = g4 < -1;
  arr[7] = helper(g0, g4);
  i0 = 0;
  while (i0 < 4) {
    g0 = -9 == g2;
    if (g0 > 40) break;
    i0++;
  }
  arr[7] = helper(g2, arr[7]);
  arr[6] = g1 >= g2;
  if (9) g2 = arr[5] < arr[1];
  else g2 = helper(g0, g0);
  if (g0 * -8) arr[3] = g4 % 7;
  else g3 = g1 % 7;
  g3 = g2 >= g4;
  if (helper(g1, g4)) g1 = helper(-2, g5);
  else g1 = helper(g2, 9);
  switch (g4 % 3) {
  case 0: g0++; break;
  case 1: g4++;
  default: bump(-9 ^ g4);
  }
  switch (g1 % 3) {
  case 0: g1 = g0 == g0; break;
  case 1: g1 = g5 % 7;
  default: bump(arr[7] % 7);
  }
  g5 = helper(g4, g3);
  g5 = g4 >= arr[5];
  if (g2) g0 = g4 >= g2;
  else g1 = helper(arr[2], g3);
  switch (g5 % 3) {
  case 0: g5 = g1 & arr[3]; break;
  case 1: g3 = -9 < g5;
  default: g1 = g1 % 7;
  }
  g4 = g1 == g2;
  if (g4) g5 = g3 * g0;
  else g5 = g0 % 7;
  switch (g2 % 3) {
  case 0: g2 = arr[3]; break;
  case 1: g1 = g3;
  default: g0++;
  }
  g5 = g0;
  switch (g0 % 3) {
  case 0: arr[5] = helper(g2, g5); break;
  case 1: g1 = 9 != g4;
  default: g1 = arr[7] % 7;
  }
  g5++;
  switch (g4 % 3) {
  case 0: g0 = arr[0] < -2; break;
  case 1: g1 = helper(arr[6], -5);
  default: g0 = g2 ^ g1;
  }
  if (g4 | arr[5]) g3 = g3 == g3;
  else g2++;
  i0 = 0;
  while (i0 < 2) {
    for (i1 = 0; i1 < 2; i1++) g5 = arr[1];
    i0++;
  }
  if (g0 & g3) arr[6] = 1;
  else g4++;
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g5) continue;
    g4 = g5 == g3;
  }
  switch (g1 % 3) {
  case 0: g4 = g0 * g0; break;
  case 1: g3++;
  default: g3++;
  }
  for (i0 = 0; i0 < 4; i0++) arr[i0] = g1 - arr[3];
  switch (g2 % 3) {
  case 0: g3++; break;
  case 1: bump(arr[2] % 7);
  default: g2 = g2 - -6;
  }
  if (helper(g2, -7)) g5++;
  else g4 = g1 & g0;
  for (i0 = 0; i0 < 5; i0++) {
    bump(arr[3] % 7);
    g3 = i0 * g2;
    g5 = helper(arr[2], g3);
  }
  bump(g0 * g3);
  switch (g1 % 3) {
  case 0: arr[2] = g1 % 7; break;
  case 1: g3 = 4 * g5;
  default: bump(g2);
  }
  switch (g2 % 3) {
  case 0: g4 = g0 - g0; break;
  case 1: g4 = 9 % 7;
  default: g5 = 2;
  }
  bump(g2 & g1);
  if (g5 ^ g3) g0 = g4 % 7;
  else g0 = arr[6] % 7;
  if (arr[0] * -4) bump(helper(g4, g5));
  else g5 = g1 * g5;
  g3 = g5 & arr[4];
  for (i0 = 0; i0 < 4; i0++) {
    g0 = helper(g3, -4);
    g3++;
  }
  g4 = g0 - g4;
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g5) continue;
    bump(-4 % 7);
    arr[i0] = i0 | -3;
  }
  g0 = -9 * arr[7];
  if (arr[6]) g1 = g0 % 7;
  else g2 = g0 % 7;
  if (g3 + -3) g5 = g1 | 1;
  else arr[3] = helper(g1, g3);
  arr[4] = -2 + g2;
  g5 = g2;
  if (g2) bump(g0);
  else bump(helper(g0, g2));
  switch (g0 % 3) {
  case 0: g5 = g0 % 7; break;
  case 1: arr[3] = helper(arr[5], g1);
  default: bump(-2 % 7);
  }
  for (i0 = 0; i0 < 1; i0++) g1 = -4 * g4;
  i0 = 0;
  while (i0 < 1) {
    g0++;
    i0++;
  }
  for (i0 = 0; i0 < 8; i0++) {
    if (g2 == g0) g0 = -5;
    else arr[4] = g3 % 7;
    g5 = g1 % 7;
  }
  if (helper(g2, g3)) g2 = g2 % 7;
  else g1 = g1 >= 8;
  g2 = 6 + -9;
  for (i0 = 0; i0 < 1; i0++) {
    g5 = arr[3] * -4;
    for (i1 = 0; i1 < 4; i1++) g1++;
    g5 = g3 * g4;
  }
  g3 = g4 | g1;
  switch (g5 % 3) {
  case 0: g3 = g0; break;
  case 1: bump(g3 % 7);
  default: g3 = 3 == g0;
  }
  for (i0 = 0; i0 < 8; i0++) arr[i0] = arr[2];
  switch (g4 % 3) {
  case 0: g3 = g4 >= arr[4]; break;
  case 1: g3 = arr[4] % 7;
  default: g0 = g0 - g3;
  }
  if (g3 == arr[3]) g1 = g5 * arr[6];
  else g0 = g4;
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) continue;
    g0 = g0 - arr[4];
    bump(i0 | arr[3]);
  }
  if (g2 & arr[3]) bump(g1);
  else g2++;
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g4) break;
    g3 = helper(arr[6], i0);
    bump(helper(g1, i0));
  }
  switch (g5 % 3) {
  case 0: bump(g1); break;
  case 1: g4++;
  default: g4 = helper(arr[2], arr[2]);
  }
  switch (g1 % 3) {
  case 0: g0 = helper(g4, arr[4]); break;
  case 1: g4 = g5 % 7;
  default: g5 = -3 % 7;
  }
  for (i0 = 0; i0 < 4; i0++) {
    for (i1 = 0; i1 < 1; i1++) {
      g2 = helper(arr[4], -8);
      g3 = 5 != arr[1];
    }
    g2 = i0 * g4;
  }
  g3 = g4;
  switch (g1 % 3) {
  case 0: arr[6] = arr[7]; break;
  case 1: g3++;
  default: g0 = -5 - g3;
  }
  g2 = g0;
  switch (g4 % 3) {
  case 0: g3 = helper(g4, g3); break;
  case 1: bump(g4 < g4);
  default: bump(g2 % 7);
  }
  bump(g2 ^ 3);
  arr[4] = helper(8, g4);
  switch (g0 % 3) {
  case 0: g5 = -3; break;
  case 1: g0++;
  default: g3 = arr[2] ^ g3;
  }
  if (-5 % 7) g2++;
  else g4 = -6 >= -7;
  if (g3) g3 = arr[0] + arr[0];
  else g4 = g1 % 7;
  return g0 % 100;
}
