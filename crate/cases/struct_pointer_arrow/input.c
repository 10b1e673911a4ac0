struct Node {
  int key;
  int next;
};
struct Node pool[3];
struct Node *cur;
int sum;

int main(void)
{
  pool[0].key = 5;
  pool[0].next = 2;
  pool[2].key = 7;
  pool[2].next = -1;
  cur = &pool[0];
  sum = 0;
  while (1) {
    sum = sum + cur->key;
    if (cur->next < 0) break;
    cur = &pool[cur->next];
  }
  return 0;
}
