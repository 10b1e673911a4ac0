int a[8] = {2, 3, 5, 7, 11, 13, 17, 19};
int r;

int search(int v)
{
  int lo, hi, mid;
  lo = 0;
  hi = 7;
  while (lo <= hi) {
    mid = (lo + hi) / 2;
    if (a[mid] == v) return mid;
    if (a[mid] < v) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return -1;
}

int main(void)
{
  r = search(13) * 10 + search(4) + 1;
  return 0;
}
